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


#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mobo/dataset.hpp"
#include "mobo/engine.hpp"
#include "mobo/hypervolume.hpp"
#include "mobo/run_io.hpp"
#include "mobo/summary.hpp"
#include "mobo/synthetic.hpp"

namespace mobo::cli {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

// Flags shared by `run` and `suite`.
struct EngineFlags {
  std::string dataset;
  std::string out;
  std::string config_path;
  std::string acquisition = "ehvi";
  std::vector<double> weights;
  std::uint64_t seed = 0;
  std::size_t rounds = 200;
  std::size_t init_size = 10;
  std::size_t mc_samples = 1000;
  bool fresh_draws = false;
  std::vector<double> ref;
  std::size_t directions_h = 12;
  std::vector<double> utopian;
  std::vector<double> thresholds = default_circle_thresholds();
  std::string circle_distance = "minmax";
  std::string kernel = "minmax";
  double amplitude = 1.0;
  double noise = 1e-4;
  double prior_mean = 0.0;
  std::size_t threads = 1;
  bool wall_time = false;

  std::map<std::string, CLI::Option*> options;
};

void add_engine_flags(CLI::App& app, EngineFlags& f, bool suite) {
  auto& o = f.options;
  o["dataset"] = app.add_option("--dataset", f.dataset, "Dataset file (mobo-dataset/1)");
  o["out"] = app.add_option("--out", f.out, "Output directory");
  o["config"] = app.add_option("--config", f.config_path,
                               "Resolved config to replay; explicit flags win");
  if (!suite) {
    o["acquisition"] = app.add_option("--acquisition", f.acquisition,
                                      "ehvi | scalarized-ei | random")
                           ->capture_default_str();
    o["seed"] = app.add_option("--seed", f.seed, "Master seed")->capture_default_str();
  }
  o["weights"] = app.add_option("--weights", f.weights,
                                "Scalarization weights (default uniform)")
                     ->delimiter(',');
  o["rounds"] = app.add_option("--rounds", f.rounds, "Optimization rounds")
                    ->capture_default_str();
  o["init_size"] = app.add_option("--init-size", f.init_size, "Initial design size")
                       ->capture_default_str();
  o["mc_samples"] = app.add_option("--mc-samples", f.mc_samples, "EHVI draws per candidate")
                        ->capture_default_str();
  o["fresh_draws"] = app.add_flag("--fresh-draws", f.fresh_draws,
                                  "Independent EHVI draws per candidate instead of "
                                  "one shared matrix per round");
  o["ref"] = app.add_option("--ref", f.ref, "Hypervolume reference point (default 0)")
                 ->delimiter(',');
  o["directions_h"] = app.add_option("--directions-h", f.directions_h,
                                     "Simplex-lattice granularity for R2")
                          ->capture_default_str();
  o["utopian"] = app.add_option("--utopian", f.utopian, "R2 utopian point (default 1)")
                     ->delimiter(',');
  o["thresholds"] = app.add_option("--circles-thresholds", f.thresholds,
                                   "#Circles distance thresholds")
                        ->delimiter(',');
  o["circle_distance"] = app.add_option("--circle-distance", f.circle_distance,
                                        "minmax | binary-tanimoto")
                             ->capture_default_str();
  o["kernel"] = app.add_option("--kernel", f.kernel, "minmax | tanimoto")
                    ->capture_default_str();
  o["amplitude"] = app.add_option("--amplitude", f.amplitude, "GP amplitude")
                       ->capture_default_str();
  o["noise"] = app.add_option("--noise", f.noise, "GP noise variance")
                   ->capture_default_str();
  o["prior_mean"] = app.add_option("--prior-mean", f.prior_mean, "GP constant prior mean")
                        ->capture_default_str();
  o["threads"] = app.add_option("--threads", f.threads, "Candidate scoring threads")
                     ->capture_default_str();
  o["wall_time"] = app.add_flag("--wall-time", f.wall_time,
                                "Record wall time per round (logs stop being "
                                "byte-reproducible)");
}

json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("'" + path.string() + "': " + e.what());
  }
}

void write_json_file(const json& j, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << j.dump(2) << '\n';
}

struct Resolved {
  RunConfig config;
  std::string dataset;
  std::string out;
  json extra = json::object();  // subcommand-specific keys from --config
};

// Config file first, then every flag the user actually typed. Without a
// config file the flag defaults apply.
Resolved resolve(const EngineFlags& f) {
  Resolved r;
  const bool replay = !f.config_path.empty();
  if (replay) {
    const json j = read_json_file(f.config_path);
    r.config = run_config_from_json(j);
    if (j.contains("dataset")) r.dataset = j["dataset"].get<std::string>();
    if (j.contains("out")) r.out = j["out"].get<std::string>();
    r.extra = j;
  }
  auto given = [&](const char* name) {
    auto it = f.options.find(name);
    return it != f.options.end() && (!replay || it->second->count() > 0);
  };
  RunConfig& c = r.config;
  if (given("dataset")) r.dataset = f.dataset;
  if (given("out")) r.out = f.out;
  if (given("acquisition")) c.acquisition.kind = parse_acquisition_kind(f.acquisition);
  if (given("seed")) c.master_seed = f.seed;
  if (given("weights")) c.acquisition.weights = f.weights;
  if (given("rounds")) c.rounds = f.rounds;
  if (given("init_size")) c.init_size = f.init_size;
  if (given("mc_samples")) c.acquisition.mc_samples = f.mc_samples;
  if (given("fresh_draws")) c.acquisition.common_random_numbers = !f.fresh_draws;
  if (given("ref")) c.acquisition.ref = f.ref;
  if (given("directions_h")) c.direction_granularity = f.directions_h;
  if (given("utopian")) c.utopian = f.utopian;
  if (given("thresholds")) c.circle_thresholds = f.thresholds;
  if (given("circle_distance")) c.circle_distance = parse_distance_kind(f.circle_distance);
  if (given("kernel")) c.kernel = parse_kernel_kind(f.kernel);
  if (given("amplitude")) c.gp.amplitude = f.amplitude;
  if (given("noise")) c.gp.noise_variance = f.noise;
  if (given("prior_mean")) c.gp.prior_mean = f.prior_mean;
  if (given("threads")) c.threads = f.threads;
  if (given("wall_time")) c.record_wall_time = f.wall_time;
  if (r.dataset.empty()) throw CLI::ValidationError("--dataset is required");
  if (r.out.empty()) throw CLI::ValidationError("--out is required");
  return r;
}

json resolved_json(const std::string& command, const Resolved& r,
                   const DatasetHeader& header, const RunConfig& config) {
  json j = to_json(config);
  j["command"] = command;
  j["dataset"] = r.dataset;
  j["out"] = r.out;
  j["task"] = header.task;
  j["objective_names"] = header.objective_names;
  return j;
}

void write_run_outputs(const fs::path& dir, const json& resolved,
                       const CandidatePool& pool, const RunResult& result) {
  fs::create_directories(dir);
  write_json_file(resolved, dir / "config.json");
  write_round_log(result.records, pool.dims(), dir / "round_log.csv");
  write_initial_archive(pool, result.archive, result.initial_size,
                        dir / "initial_archive.csv");
  write_json_file(run_result_json(result, pool), dir / "result.json");
}

int cmd_run(const EngineFlags& f, std::ostream& out) {
  Resolved r = resolve(f);
  const Dataset data = load_dataset(r.dataset);
  const RunConfig config = resolve_defaults(r.config, data.pool.dims());
  config.validate(data.pool);

  const RunResult result = run(data.pool, config);
  const json resolved = resolved_json("run", r, data.header, config);
  write_run_outputs(r.out, resolved, data.pool, result);
  out << "run " << to_string(config.acquisition.kind) << " seed "
      << config.master_seed << ": final hv " << format_double(result.final_hv())
      << ", r2 " << format_double(result.final_r2()) << " -> " << r.out << '\n';
  return kExitOk;
}

int cmd_suite(const EngineFlags& f, const std::vector<std::string>& acquisitions,
              const std::vector<std::uint64_t>& seeds_flag, CLI::Option* acq_opt,
              CLI::Option* seeds_opt, std::ostream& out) {
  Resolved r = resolve(f);
  std::vector<std::uint64_t> seeds = seeds_flag;
  std::vector<std::string> acq_names = acquisitions;
  if (!f.config_path.empty()) {
    if (seeds_opt->count() == 0 && r.extra.contains("seeds")) {
      seeds = r.extra["seeds"].get<std::vector<std::uint64_t>>();
    }
    if (acq_opt->count() == 0 && r.extra.contains("acquisitions")) {
      acq_names = r.extra["acquisitions"].get<std::vector<std::string>>();
    }
  }
  std::vector<AcquisitionKind> methods;
  for (const auto& name : acq_names) methods.push_back(parse_acquisition_kind(name));
  if (methods.empty()) throw CLI::ValidationError("--acquisitions is empty");
  if (seeds.empty()) throw CLI::ValidationError("--seeds is empty");

  const Dataset data = load_dataset(r.dataset);
  RunConfig base = resolve_defaults(r.config, data.pool.dims());
  base.validate(data.pool);

  json resolved = resolved_json("suite", r, data.header, base);
  resolved.erase("acquisition");
  resolved.erase("seed");
  resolved["seeds"] = seeds;
  json names = json::array();
  for (auto m : methods) names.push_back(std::string(to_string(m)));
  resolved["acquisitions"] = names;
  fs::create_directories(r.out);
  write_json_file(resolved, fs::path(r.out) / "config.json");

  std::vector<RunOutcome> outcomes;
  for (auto method : methods) {
    for (auto seed : seeds) {
      RunConfig config = base;
      config.acquisition.kind = method;
      config.master_seed = seed;
      const RunResult result = run(data.pool, config);
      const fs::path dir = fs::path(r.out) / std::string(to_string(method)) /
                           ("seed-" + std::to_string(seed));
      Resolved per_run = r;
      per_run.out = dir.string();
      write_run_outputs(dir, resolved_json("run", per_run, data.header, config),
                        data.pool, result);
      outcomes.push_back(outcome_of(result));
      out << to_string(method) << " seed " << seed << ": final hv "
          << format_double(result.final_hv()) << ", r2 "
          << format_double(result.final_r2()) << '\n';
    }
  }
  const SuiteSummary summary = summarize(data.header.task, outcomes);
  write_summary(summary, fs::path(r.out) / "summary");
  write_summary_text(summary, out);
  return kExitOk;
}

int cmd_synth(const SyntheticParams& params, const std::string& path,
              std::ostream& out) {
  const SyntheticDataset syn = generate_synthetic(params);
  if (const auto parent = fs::path(path).parent_path(); !parent.empty()) {
    fs::create_directories(parent);
  }
  write_dataset(syn.dataset, path);
  out << "wrote " << syn.dataset.pool.size() << " records ("
      << syn.dataset.header.dims() << " objectives) to " << path << '\n';
  return kExitOk;
}

int cmd_validate(const std::string& path, std::ostream& out) {
  const Dataset data = load_dataset(path);
  out << path << ": ok, task '" << data.header.task << "', "
      << data.pool.size() << " records, " << data.header.dims()
      << " objectives\n";
  return kExitOk;
}

// Recomputes the per-round HV / R2 trace of one run directory from its
// initial archive and round log, checking it against the logged values.
RunOutcome recompute_run(const fs::path& dir,
                         const std::optional<std::string>& dataset_override,
                         std::string& task, std::ostream& out) {
  const json cfg = read_json_file(dir / "config.json");
  RunConfig config = run_config_from_json(cfg);
  const InitialArchive init = read_initial_archive(dir / "initial_archive.csv");
  const RoundLog log = read_round_log(dir / "round_log.csv");
  if (init.objectives.empty()) {
    throw std::runtime_error(dir.string() + ": empty initial archive");
  }
  const std::size_t d = init.objectives.front().size();
  if (log.dims != d) {
    throw std::runtime_error(dir.string() + ": round log / archive dimension mismatch");
  }
  config = resolve_defaults(config, d);
  if (cfg.contains("task")) task = cfg["task"].get<std::string>();

  DirectionSet dirs = d >= 2 ? generate_directions(d, config.direction_granularity)
                             : DirectionSet{{{1.0}}, {}};
  dirs.utopian = config.utopian;

  std::vector<ObjectiveVector> objectives = init.objectives;
  std::vector<std::string> ids = init.ids;
  std::size_t mismatches = 0;
  double hv = 0.0;
  double r2 = 0.0;
  {
    std::vector<FrontEntry> entries;
    for (std::size_t i = 0; i < objectives.size(); ++i) entries.push_back({i, objectives[i]});
    hv = hypervolume_exact(non_dominated_filter(entries), config.ref());
    r2 = r2_indicator(objectives, dirs);
  }
  for (const auto& rec : log.records) {
    objectives.push_back(rec.objectives);
    ids.push_back(rec.selected_id);
    std::vector<FrontEntry> entries;
    for (std::size_t i = 0; i < objectives.size(); ++i) entries.push_back({i, objectives[i]});
    hv = hypervolume_exact(non_dominated_filter(entries), config.ref());
    r2 = r2_indicator(objectives, dirs);
    if (hv != rec.hv || r2 != rec.r2) ++mismatches;
  }
  if (mismatches > 0) {
    throw std::runtime_error(dir.string() + ": " + std::to_string(mismatches) +
                             " logged rounds disagree with recomputed HV/R2");
  }

  RunOutcome o;
  o.method = config.acquisition.kind;
  o.seed = config.master_seed;
  o.rounds = log.records.size();
  o.final_hv = hv;
  o.final_r2 = r2;
  o.circle_thresholds = config.circle_thresholds;

  const std::string dataset =
      dataset_override ? *dataset_override
                       : (cfg.contains("dataset") ? cfg["dataset"].get<std::string>() : "");
  if (!dataset.empty() && fs::exists(dataset)) {
    const Dataset data = load_dataset(dataset);
    Archive archive(data.pool.size());
    for (const auto& id : ids) {
      const auto idx = data.pool.find(id);
      if (!idx) {
        throw std::runtime_error(dir.string() + ": id '" + id + "' not in " + dataset);
      }
      archive.add(*idx);
    }
    o.circles = circles_for_archive(data.pool, archive, config);
  } else {
    const json result = read_json_file(dir / "result.json");
    for (const auto& c : result.at("circles")) {
      o.circles.push_back(c.at("count").get<std::size_t>());
    }
  }
  out << dir.string() << ": " << log.records.size()
      << " rounds verified, final hv " << format_double(hv) << '\n';
  return o;
}

int cmd_report(const std::vector<std::string>& runs,
               const std::optional<std::string>& dataset,
               const std::string& out_stem, std::ostream& out) {
  std::vector<RunOutcome> outcomes;
  std::string task;
  for (const auto& dir : runs) {
    outcomes.push_back(recompute_run(dir, dataset, task, out));
  }
  const SuiteSummary summary = summarize(task, outcomes);
  if (const auto parent = fs::path(out_stem).parent_path(); !parent.empty()) {
    fs::create_directories(parent);
  }
  write_summary(summary, out_stem);
  write_summary_text(summary, out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Pool-based multi-objective Bayesian optimization benchmark"};
  app.require_subcommand(1);

  EngineFlags run_flags;
  auto* run_cmd = app.add_subcommand("run", "One (dataset, acquisition, seed) trial");
  add_engine_flags(*run_cmd, run_flags, false);

  EngineFlags suite_flags;
  std::vector<std::string> acquisitions = {"ehvi", "scalarized-ei", "random"};
  std::vector<std::uint64_t> seeds = {1, 2, 3};
  auto* suite_cmd = app.add_subcommand("suite", "Seeds x acquisitions with summary");
  add_engine_flags(*suite_cmd, suite_flags, true);
  auto* acq_opt = suite_cmd->add_option("--acquisitions", acquisitions,
                                        "Comma-separated acquisitions")
                      ->delimiter(',')
                      ->capture_default_str();
  auto* seeds_opt = suite_cmd->add_option("--seeds", seeds, "Comma-separated seeds")
                        ->delimiter(',')
                        ->capture_default_str();

  SyntheticParams synth;
  std::string synth_out;
  auto* synth_cmd = app.add_subcommand("synth", "Write a synthetic dataset");
  synth_cmd->add_option("--seed", synth.seed, "Generator seed")->capture_default_str();
  synth_cmd->add_option("--n", synth.n, "Number of molecules")->capture_default_str();
  synth_cmd->add_option("--d", synth.d, "Number of objectives")->capture_default_str();
  synth_cmd->add_option("--n-features", synth.n_features, "Feature vocabulary size")
      ->capture_default_str();
  synth_cmd->add_option("--density", synth.density, "Feature inclusion probability")
      ->capture_default_str();
  synth_cmd->add_option("--out", synth_out, "Output dataset path")->required();

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "Check a dataset file");
  validate_cmd->add_option("dataset,--dataset", validate_path, "Dataset file")
      ->required();

  std::vector<std::string> report_runs;
  std::string report_dataset;
  std::string report_out;
  auto* report_cmd =
      app.add_subcommand("report", "Recompute metrics from existing run directories");
  report_cmd->add_option("--runs", report_runs, "Run output directories")
      ->required()
      ->expected(1, -1);
  auto* report_dataset_opt = report_cmd->add_option(
      "--dataset", report_dataset, "Dataset for #Circles (default: from config)");
  report_cmd->add_option("--out", report_out, "Summary path stem")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*run_cmd) return cmd_run(run_flags, out);
    if (*suite_cmd) {
      return cmd_suite(suite_flags, acquisitions, seeds, acq_opt, seeds_opt, out);
    }
    if (*synth_cmd) return cmd_synth(synth, synth_out, out);
    if (*validate_cmd) return cmd_validate(validate_path, out);
    if (*report_cmd) {
      std::optional<std::string> ds;
      if (report_dataset_opt->count() > 0) ds = report_dataset;
      return cmd_report(report_runs, ds, report_out, out);
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace mobo::cli
