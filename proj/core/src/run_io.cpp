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


#include "mobo/run_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mobo {

namespace {

using json = nlohmann::json;

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
  return in;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

double parse_double(const std::string& s, const std::filesystem::path& path,
                    std::size_t line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::runtime_error(path.string() + ":" + std::to_string(line) +
                             ": bad number '" + s + "'");
  }
  return v;
}

std::size_t parse_size(const std::string& s, const std::filesystem::path& path,
                       std::size_t line) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::runtime_error(path.string() + ":" + std::to_string(line) +
                             ": bad integer '" + s + "'");
  }
  return v;
}

std::string obj_columns(std::size_t d) {
  std::string out;
  for (std::size_t k = 1; k <= d; ++k) out += ",obj_" + std::to_string(k);
  return out;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                       std::chars_format::general, 17);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

void write_round_log(std::span<const RunRecord> records, std::size_t d,
                     const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "round,selected_id,acq_score" << obj_columns(d) << ",hv,r2,wall_ms\n";
  for (const auto& r : records) {
    if (r.objectives.size() != d) {
      throw std::invalid_argument("round log: record objective count mismatch");
    }
    out << r.round << ',' << csv_field(r.selected_id) << ','
        << format_double(r.acq_score);
    for (double v : r.objectives) out << ',' << format_double(v);
    out << ',' << format_double(r.hv) << ',' << format_double(r.r2) << ','
        << format_double(r.wall_ms) << '\n';
  }
  if (!out) throw std::runtime_error("error writing '" + path.string() + "'");
}

RoundLog read_round_log(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error(path.string() + ": empty round log");
  }
  const auto header = split_csv(line);
  if (header.size() < 6 || header[0] != "round") {
    throw std::runtime_error(path.string() + ": not a round log");
  }
  RoundLog log;
  log.dims = header.size() - 6;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != header.size()) {
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                               ": wrong column count");
    }
    RunRecord r;
    r.round = parse_size(f[0], path, lineno);
    r.selected_id = f[1];
    r.acq_score = parse_double(f[2], path, lineno);
    for (std::size_t k = 0; k < log.dims; ++k) {
      r.objectives.push_back(parse_double(f[3 + k], path, lineno));
    }
    r.hv = parse_double(f[3 + log.dims], path, lineno);
    r.r2 = parse_double(f[4 + log.dims], path, lineno);
    r.wall_ms = parse_double(f[5 + log.dims], path, lineno);
    log.records.push_back(std::move(r));
  }
  return log;
}

void write_initial_archive(const CandidatePool& pool, const Archive& archive,
                           std::size_t initial_size,
                           const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "position,id" << obj_columns(pool.dims()) << '\n';
  const auto& order = archive.indices();
  for (std::size_t i = 0; i < initial_size && i < order.size(); ++i) {
    const auto& m = pool[order[i]];
    out << i << ',' << csv_field(m.id);
    for (double v : m.objectives) out << ',' << format_double(v);
    out << '\n';
  }
  if (!out) throw std::runtime_error("error writing '" + path.string() + "'");
}

InitialArchive read_initial_archive(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error(path.string() + ": empty archive file");
  }
  const auto header = split_csv(line);
  if (header.size() < 3 || header[0] != "position") {
    throw std::runtime_error(path.string() + ": not an initial archive file");
  }
  const std::size_t d = header.size() - 2;
  InitialArchive out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != header.size()) {
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                               ": wrong column count");
    }
    out.ids.push_back(f[1]);
    ObjectiveVector y;
    for (std::size_t k = 0; k < d; ++k) {
      y.push_back(parse_double(f[2 + k], path, lineno));
    }
    out.objectives.push_back(std::move(y));
  }
  return out;
}

json to_json(const RunConfig& c) {
  return {
      {"acquisition", to_string(c.acquisition.kind)},
      {"weights", c.acquisition.weights},
      {"mc_samples", c.acquisition.mc_samples},
      {"common_random_numbers", c.acquisition.common_random_numbers},
      {"ref", c.acquisition.ref},
      {"rounds", c.rounds},
      {"init_size", c.init_size},
      {"seed", c.master_seed},
      {"amplitude", c.gp.amplitude},
      {"noise_variance", c.gp.noise_variance},
      {"prior_mean", c.gp.prior_mean},
      {"kernel", to_string(c.kernel)},
      {"directions_h", c.direction_granularity},
      {"utopian", c.utopian},
      {"circle_thresholds", c.circle_thresholds},
      {"circle_distance", to_string(c.circle_distance)},
      {"threads", c.threads},
      {"record_wall_time", c.record_wall_time},
      {"rng", std::string(kRngAlgorithm)},
  };
}

RunConfig run_config_from_json(const json& j) {
  RunConfig c;
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  auto get = [&](const char* key, auto& target) {
    if (j.contains(key)) j.at(key).get_to(target);
  };
  if (j.contains("acquisition")) {
    c.acquisition.kind =
        parse_acquisition_kind(j.at("acquisition").get<std::string>());
  }
  get("weights", c.acquisition.weights);
  get("mc_samples", c.acquisition.mc_samples);
  get("common_random_numbers", c.acquisition.common_random_numbers);
  get("ref", c.acquisition.ref);
  get("rounds", c.rounds);
  get("init_size", c.init_size);
  get("seed", c.master_seed);
  get("amplitude", c.gp.amplitude);
  get("noise_variance", c.gp.noise_variance);
  get("prior_mean", c.gp.prior_mean);
  if (j.contains("kernel")) {
    c.kernel = parse_kernel_kind(j.at("kernel").get<std::string>());
  }
  get("directions_h", c.direction_granularity);
  get("utopian", c.utopian);
  get("circle_thresholds", c.circle_thresholds);
  if (j.contains("circle_distance")) {
    c.circle_distance =
        parse_distance_kind(j.at("circle_distance").get<std::string>());
  }
  get("threads", c.threads);
  get("record_wall_time", c.record_wall_time);
  return c;
}

json run_result_json(const RunResult& result, const CandidatePool& pool) {
  json circles = json::array();
  for (std::size_t i = 0; i < result.circles.size(); ++i) {
    circles.push_back({{"threshold", result.config.circle_thresholds[i]},
                       {"count", result.circles[i]}});
  }
  json front = json::array();
  for (const auto& e : result.front.entries()) front.push_back(pool[e.id].id);
  json archive = json::array();
  for (std::size_t idx : result.archive.indices()) archive.push_back(pool[idx].id);
  return {{"acquisition", to_string(result.config.acquisition.kind)},
          {"seed", result.config.master_seed},
          {"rounds", result.records.size()},
          {"initial_size", result.initial_size},
          {"initial_hv", result.initial_hv},
          {"initial_r2", result.initial_r2},
          {"final_hv", result.final_hv()},
          {"final_r2", result.final_r2()},
          {"circles", std::move(circles)},
          {"pareto_front_ids", std::move(front)},
          {"archive_ids", std::move(archive)},
          {"rng", std::string(kRngAlgorithm)}};
}

}  // namespace mobo
