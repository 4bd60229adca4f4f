// Copyright 2026 The mobo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "mobo/summary.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>

namespace mobo {

namespace {

using json = nlohmann::json;

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string mean_std(const MeanStd& m) {
  return fixed(m.mean, 4) + " ± " + fixed(m.std, 4);
}

MeanStd mean_std_of(const std::vector<double>& xs) {
  return {mean(xs), sample_stddev(xs)};
}

void table_row(std::ostream& out, const std::vector<std::string>& cells,
               const std::vector<std::size_t>& widths) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out << (i == 0 ? "" : " | ") << pad(cells[i], widths[i]);
  }
  out << '\n';
}

void effect_table(std::ostream& out, const SuiteSummary& s, bool hv) {
  out << (hv ? "Effect sizes on final hypervolume\n"
             : "Effect sizes on final R2 (negative favours the first method)\n");
  const std::vector<std::size_t> widths = {30, 10, 13};
  table_row(out, {"Comparison", "Cohen's d", "Cliff's Delta"}, widths);
  for (const auto& e : s.effects) {
    const auto& r = hv ? e.hv : e.r2;
    table_row(out,
              {display_name(e.first) + " vs " + display_name(e.second),
               r.cohens_d ? fixed(*r.cohens_d, 3) : std::string("undefined"),
               fixed(r.cliffs_delta, 3)},
              widths);
  }
  out << '\n';
}

json effect_json(const EffectSizeReport& r) {
  return {{"cohens_d", r.cohens_d ? json(*r.cohens_d) : json(nullptr)},
          {"cliffs_delta", r.cliffs_delta}};
}

}  // namespace

RunOutcome outcome_of(const RunResult& result) {
  RunOutcome o;
  o.method = result.config.acquisition.kind;
  o.seed = result.config.master_seed;
  o.rounds = result.records.size();
  o.final_hv = result.final_hv();
  o.final_r2 = result.final_r2();
  o.circle_thresholds = result.config.circle_thresholds;
  o.circles = result.circles;
  return o;
}

std::string display_name(AcquisitionKind kind) {
  switch (kind) {
    case AcquisitionKind::kEhvi:
      return "EHVI";
    case AcquisitionKind::kScalarizedEi:
      return "Scalarized EI";
    case AcquisitionKind::kRandom:
      return "Random";
  }
  return "?";
}

SuiteSummary summarize(const std::string& task,
                       const std::vector<RunOutcome>& outcomes) {
  if (outcomes.empty()) throw std::invalid_argument("summary: no runs");
  SuiteSummary s;
  s.task = task;
  s.rounds = outcomes.front().rounds;
  s.circle_thresholds = outcomes.front().circle_thresholds;

  std::vector<std::vector<const RunOutcome*>> groups;
  for (const auto& o : outcomes) {
    if (o.circle_thresholds != s.circle_thresholds) {
      throw std::invalid_argument("summary: runs use different #Circles thresholds");
    }
    auto it = std::find_if(s.methods.begin(), s.methods.end(),
                           [&](const MethodSummary& m) { return m.method == o.method; });
    if (it == s.methods.end()) {
      s.methods.push_back(MethodSummary{});
      s.methods.back().method = o.method;
      groups.emplace_back();
      it = std::prev(s.methods.end());
    }
    groups[static_cast<std::size_t>(it - s.methods.begin())].push_back(&o);
  }

  for (std::size_t g = 0; g < s.methods.size(); ++g) {
    auto& m = s.methods[g];
    std::vector<std::vector<double>> circles(s.circle_thresholds.size());
    for (const RunOutcome* o : groups[g]) {
      m.seeds.push_back(o->seed);
      m.final_hv.push_back(o->final_hv);
      m.final_r2.push_back(o->final_r2);
      for (std::size_t t = 0; t < o->circles.size() && t < circles.size(); ++t) {
        circles[t].push_back(static_cast<double>(o->circles[t]));
      }
    }
    m.hv = mean_std_of(m.final_hv);
    m.r2 = mean_std_of(m.final_r2);
    for (const auto& c : circles) m.circles.push_back(mean_std_of(c));
    if (m.seeds.size() < 2) s.degenerate = true;
  }

  for (std::size_t a = 0; a < s.methods.size(); ++a) {
    for (std::size_t b = a + 1; b < s.methods.size(); ++b) {
      PairwiseEffect e;
      e.first = s.methods[a].method;
      e.second = s.methods[b].method;
      e.hv = effect_sizes(s.methods[a].final_hv, s.methods[b].final_hv);
      e.r2 = effect_sizes(s.methods[a].final_r2, s.methods[b].final_r2);
      s.effects.push_back(e);
    }
  }
  return s;
}

SuiteSummary summarize(const SuiteResult& suite) {
  std::vector<RunOutcome> outcomes;
  for (const auto& per_method : suite.runs) {
    for (const auto& r : per_method) outcomes.push_back(outcome_of(r));
  }
  return summarize(suite.task, outcomes);
}

void write_summary_text(const SuiteSummary& s, std::ostream& out) {
  std::vector<std::string> head = {"Task"};
  std::vector<std::size_t> widths = {std::max<std::size_t>(12, s.task.size())};
  for (const auto& m : s.methods) {
    head.push_back(display_name(m.method));
    widths.push_back(17);
  }

  out << "Task: " << s.task << '\n';
  if (!s.methods.empty()) {
    out << "Seeds per method: " << s.methods.front().seeds.size();
    if (s.degenerate) out << " (degenerate: std fields are 0)";
    out << '\n';
  }
  out << '\n';

  out << "Final hypervolume (mean ± std) after " << s.rounds
      << " BO evaluations\n";
  table_row(out, head, widths);
  std::vector<std::string> row = {s.task};
  for (const auto& m : s.methods) row.push_back(mean_std(m.hv));
  table_row(out, row, widths);
  out << '\n';

  out << "Final R2 (mean ± std) after " << s.rounds << " BO evaluations\n";
  table_row(out, head, widths);
  row = {s.task};
  for (const auto& m : s.methods) row.push_back(mean_std(m.r2));
  table_row(out, row, widths);
  out << '\n';

  if (!s.effects.empty()) {
    effect_table(out, s, true);
    effect_table(out, s, false);
  }

  out << "#Circles on the Pareto-optimal archive (mean ± std)\n";
  std::vector<std::string> chead = {"Threshold"};
  std::vector<std::size_t> cwidths = {12};
  for (const auto& m : s.methods) {
    chead.push_back(display_name(m.method));
    cwidths.push_back(17);
  }
  table_row(out, chead, cwidths);
  for (std::size_t t = 0; t < s.circle_thresholds.size(); ++t) {
    std::vector<std::string> crow = {fixed(s.circle_thresholds[t], 2)};
    for (const auto& m : s.methods) {
      crow.push_back(t < m.circles.size() ? mean_std(m.circles[t]) : "-");
    }
    table_row(out, crow, cwidths);
  }
}

json summary_json(const SuiteSummary& s) {
  json methods = json::array();
  for (const auto& m : s.methods) {
    json circles = json::array();
    for (std::size_t t = 0; t < m.circles.size(); ++t) {
      circles.push_back({{"threshold", s.circle_thresholds[t]},
                         {"mean", m.circles[t].mean},
                         {"std", m.circles[t].std}});
    }
    methods.push_back({{"method", to_string(m.method)},
                       {"display_name", display_name(m.method)},
                       {"seeds", m.seeds},
                       {"final_hv", m.final_hv},
                       {"final_r2", m.final_r2},
                       {"hv_mean", m.hv.mean},
                       {"hv_std", m.hv.std},
                       {"r2_mean", m.r2.mean},
                       {"r2_std", m.r2.std},
                       {"circles", std::move(circles)}});
  }
  json effects = json::array();
  for (const auto& e : s.effects) {
    effects.push_back({{"first", to_string(e.first)},
                       {"second", to_string(e.second)},
                       {"hv", effect_json(e.hv)},
                       {"r2", effect_json(e.r2)}});
  }
  json out = {{"task", s.task},
              {"rounds", s.rounds},
              {"degenerate", s.degenerate},
              {"circle_thresholds", s.circle_thresholds},
              {"methods", std::move(methods)}};
  if (!s.effects.empty()) out["effect_sizes"] = std::move(effects);
  return out;
}

void write_summary(const SuiteSummary& summary,
                   const std::filesystem::path& stem) {
  auto txt_path = stem;
  txt_path += ".txt";
  auto json_path = stem;
  json_path += ".json";
  std::ofstream txt(txt_path, std::ios::binary);
  std::ofstream js(json_path, std::ios::binary);
  if (!txt || !js) {
    throw std::runtime_error("cannot write summary at '" + stem.string() + "'");
  }
  write_summary_text(summary, txt);
  js << summary_json(summary).dump(2) << '\n';
  if (!txt || !js) {
    throw std::runtime_error("error writing summary at '" + stem.string() + "'");
  }
}

}  // namespace mobo
