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


#include "mobo/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "mobo/hypervolume.hpp"

namespace mobo {

void RunConfig::validate(const CandidatePool& pool) const {
  const std::size_t d = pool.dims();
  if (pool.empty()) throw std::invalid_argument("candidate pool is empty");
  if (d < 1 || d > 3) {
    throw std::invalid_argument("engine supports 1 to 3 objectives, pool has " +
                                std::to_string(d));
  }
  acquisition.validate(d);
  gp.validate();
  if (init_size < 1) throw std::invalid_argument("init_size must be >= 1");
  if (init_size > pool.size()) {
    throw std::invalid_argument("init_size " + std::to_string(init_size) +
                                " exceeds pool size " +
                                std::to_string(pool.size()));
  }
  if (init_size + rounds > pool.size()) {
    throw std::invalid_argument("init_size + rounds exceeds pool size " +
                                std::to_string(pool.size()));
  }
  if (utopian.size() != d) {
    throw std::invalid_argument("utopian point dimension mismatch");
  }
  if (d >= 2 && direction_granularity < 1) {
    throw std::invalid_argument("direction granularity must be >= 1");
  }
  for (double t : circle_thresholds) {
    if (!(t > 0.0 && t <= 1.0)) {
      throw std::invalid_argument("circle thresholds must lie in (0, 1]");
    }
  }
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
}

RunConfig resolve_defaults(RunConfig config, std::size_t d) {
  if (config.acquisition.ref.empty()) config.acquisition.ref.assign(d, 0.0);
  if (config.acquisition.weights.empty()) {
    config.acquisition.weights = uniform_weights(d);
  }
  if (config.utopian.empty()) config.utopian.assign(d, 1.0);
  return config;
}

void Archive::add(std::size_t pool_index) {
  if (pool_index >= member_.size()) {
    throw std::out_of_range("archive: pool index out of range");
  }
  if (member_[pool_index]) {
    throw std::logic_error("archive: candidate " + std::to_string(pool_index) +
                           " already evaluated");
  }
  member_[pool_index] = true;
  order_.push_back(pool_index);
}

std::vector<FrontEntry> Archive::entries(const CandidatePool& pool) const {
  std::vector<FrontEntry> out;
  out.reserve(order_.size());
  for (std::size_t i : order_) out.push_back({i, pool[i].objectives});
  return out;
}

std::vector<ObjectiveVector> Archive::objectives(
    const CandidatePool& pool) const {
  std::vector<ObjectiveVector> out;
  out.reserve(order_.size());
  for (std::size_t i : order_) out.push_back(pool[i].objectives);
  return out;
}

std::vector<CountFingerprint> Archive::fingerprints(
    const CandidatePool& pool) const {
  std::vector<CountFingerprint> out;
  out.reserve(order_.size());
  for (std::size_t i : order_) out.push_back(pool[i].fingerprint);
  return out;
}

namespace {

bool uses_surrogate(const RunConfig& config) {
  return config.acquisition.kind != AcquisitionKind::kRandom;
}

void append_cross_column(RunState& state, const CandidatePool& pool,
                         const RunConfig& config, std::size_t pool_index) {
  const auto col = static_cast<Eigen::Index>(state.archive.size() - 1);
  if (col >= state.cross_kernel.cols()) {
    state.cross_kernel.conservativeResize(Eigen::NoChange, col + 1);
  }
  const auto& fp = pool[pool_index].fingerprint;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    state.cross_kernel(static_cast<Eigen::Index>(i), col) =
        config.gp.amplitude * kernel_value(config.kernel, pool[i].fingerprint, fp);
  }
}

void refit(RunState& state, const CandidatePool& pool, const RunConfig& config) {
  const auto inputs = state.archive.fingerprints(pool);
  const auto n = static_cast<Eigen::Index>(inputs.size());
  const auto d = static_cast<Eigen::Index>(pool.dims());
  Eigen::MatrixXd targets(n, d);
  const auto& order = state.archive.indices();
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto& y = pool[order[static_cast<std::size_t>(r)]].objectives;
    for (Eigen::Index c = 0; c < d; ++c) {
      targets(r, c) = y[static_cast<std::size_t>(c)];
    }
  }
  state.surrogate = fit(inputs, targets, config.gp, config.kernel);
}

// Splits [0, count) into contiguous blocks, one per worker. Each index is
// handled by exactly one worker, and results are written by index.
template <typename MakeWorker>
void parallel_blocks(std::size_t count, std::size_t threads,
                     MakeWorker&& make_worker) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    make_worker()(std::size_t{0}, count);
    return;
  }
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  const std::size_t block = (count + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t begin = t * block;
    const std::size_t end = std::min(count, begin + block);
    if (begin >= end) break;
    workers.emplace_back([&make_worker, begin, end] {
      make_worker()(begin, end);
    });
  }
}

}  // namespace

RunState init_run(const CandidatePool& pool, const RunConfig& config) {
  config.validate(pool);
  RunState state;
  state.archive = Archive(pool.size());

  // Partial Fisher-Yates over pool indices.
  Rng init = make_stream(config.master_seed, stream::kInit);
  std::vector<std::size_t> perm(pool.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  for (std::size_t i = 0; i < config.init_size; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, perm.size() - 1);
    std::swap(perm[i], perm[pick(init)]);
  }

  state.random_stream = make_stream(config.master_seed, stream::kRandom);
  if (pool.dims() >= 2) {
    state.directions =
        generate_directions(pool.dims(), config.direction_granularity);
  } else {
    state.directions.directions = {{1.0}};
  }
  state.directions.utopian = config.utopian;

  const bool surrogate = uses_surrogate(config);
  if (surrogate) {
    const auto capacity =
        static_cast<Eigen::Index>(config.init_size + config.rounds);
    state.cross_kernel.resize(static_cast<Eigen::Index>(pool.size()), capacity);
    state.prior_variance.resize(static_cast<Eigen::Index>(pool.size()));
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const auto& fp = pool[i].fingerprint;
      state.prior_variance(static_cast<Eigen::Index>(i)) =
          config.gp.amplitude * kernel_value(config.kernel, fp, fp);
    }
  }
  for (std::size_t i = 0; i < config.init_size; ++i) {
    state.archive.add(perm[i]);
    if (surrogate) append_cross_column(state, pool, config, perm[i]);
  }
  if (surrogate) refit(state, pool, config);
  return state;
}

std::size_t argmax_lowest_index(const std::vector<double>& scores) {
  std::size_t best = 0;
  double best_score = -std::numeric_limits<double>::infinity();
  bool found = false;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const double s = std::isnan(scores[i])
                         ? -std::numeric_limits<double>::infinity()
                         : scores[i];
    if (!found || s > best_score) {
      best = i;
      best_score = s;
      found = true;
    }
  }
  return best;
}

CandidateScores score_candidates(RunState& state, const CandidatePool& pool,
                                 const RunConfig& config) {
  CandidateScores out;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (!state.archive.contains(i)) out.candidates.push_back(i);
  }
  const std::size_t m = out.candidates.size();
  out.scores.assign(m, 0.0);
  if (m == 0) return out;

  const auto& acq = config.acquisition;
  if (acq.kind == AcquisitionKind::kRandom) {
    for (std::size_t c = 0; c < m; ++c) {
      out.scores[c] = random_score(state.random_stream);
    }
    return out;
  }

  const auto n = static_cast<Eigen::Index>(state.archive.size());
  Eigen::MatrixXd cross(static_cast<Eigen::Index>(m), n);
  Eigen::VectorXd prior(static_cast<Eigen::Index>(m));
  for (std::size_t c = 0; c < m; ++c) {
    const auto row = static_cast<Eigen::Index>(out.candidates[c]);
    cross.row(static_cast<Eigen::Index>(c)) =
        state.cross_kernel.row(row).head(n);
    prior(static_cast<Eigen::Index>(c)) = state.prior_variance(row);
  }
  const BatchPrediction pred =
      predict_batch_cross(*state.surrogate, cross, prior);
  const std::size_t d = pool.dims();

  if (acq.kind == AcquisitionKind::kScalarizedEi) {
    double incumbent = -std::numeric_limits<double>::infinity();
    for (std::size_t idx : state.archive.indices()) {
      incumbent = std::max(
          incumbent, scalarize_weighted(pool[idx].objectives, acq.weights));
    }
    parallel_blocks(m, config.threads, [&] {
      return [&](std::size_t begin, std::size_t end) {
        PosteriorBelief belief{std::vector<double>(d), std::vector<double>(d)};
        for (std::size_t c = begin; c < end; ++c) {
          const auto r = static_cast<Eigen::Index>(c);
          for (std::size_t k = 0; k < d; ++k) {
            belief.mean[k] = pred.means(r, static_cast<Eigen::Index>(k));
            belief.variance[k] = pred.variances(r, static_cast<Eigen::Index>(k));
          }
          out.scores[c] = scalarized_ei_score(belief, acq.weights, incumbent);
        }
      };
    });
    return out;
  }

  const ParetoFront front = non_dominated_filter(state.archive.entries(pool));
  const auto front_points = front.points();
  std::optional<NormalDraws> shared;
  if (acq.common_random_numbers) {
    Rng draws_rng = make_stream(config.master_seed, stream::kEhvi, state.round);
    shared.emplace(acq.mc_samples, d, draws_rng);
  }
  parallel_blocks(m, config.threads, [&] {
    return [&](std::size_t begin, std::size_t end) {
      std::vector<double> mean(d);
      std::vector<double> var(d);
      std::optional<EhviScorer> scorer;
      if (shared) scorer.emplace(front_points, acq.ref, *shared);
      for (std::size_t c = begin; c < end; ++c) {
        const auto r = static_cast<Eigen::Index>(c);
        for (std::size_t k = 0; k < d; ++k) {
          mean[k] = pred.means(r, static_cast<Eigen::Index>(k));
          var[k] = pred.variances(r, static_cast<Eigen::Index>(k));
        }
        if (shared) {
          out.scores[c] = (*scorer)(mean, var);
        } else {
          // Fresh draws keyed by (round, pool index): independent of
          // evaluation order and thread count.
          Rng rng = make_stream(config.master_seed, "ehvi-fresh",
                                (static_cast<std::uint64_t>(state.round) << 32) |
                                    out.candidates[c]);
          NormalDraws own(acq.mc_samples, d, rng);
          EhviScorer fresh(front_points, acq.ref, own);
          out.scores[c] = fresh(mean, var);
        }
      }
    };
  });
  return out;
}

RunRecord run_round(RunState& state, const CandidatePool& pool,
                    const RunConfig& config) {
  if (state.archive.size() >= pool.size()) {
    throw std::runtime_error("candidate pool exhausted");
  }
  const auto start = std::chrono::steady_clock::now();
  ++state.round;

  const CandidateScores scored = score_candidates(state, pool, config);
  const std::size_t pick = argmax_lowest_index(scored.scores);
  const std::size_t selected = scored.candidates[pick];

  state.archive.add(selected);
  if (uses_surrogate(config)) {
    append_cross_column(state, pool, config, selected);
    refit(state, pool, config);
  }

  RunRecord record;
  record.round = state.round;
  record.selected_id = pool[selected].id;
  record.acq_score = scored.scores[pick];
  record.objectives = pool[selected].objectives;
  const auto objectives = state.archive.objectives(pool);
  const ParetoFront front = non_dominated_filter(state.archive.entries(pool));
  record.hv = hypervolume_exact(front, config.ref());
  record.r2 = r2_indicator(objectives, state.directions);
  if (config.record_wall_time) {
    record.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  }
  return record;
}

std::vector<std::size_t> circles_for_archive(const CandidatePool& pool,
                                             const Archive& archive,
                                             const RunConfig& config) {
  const ParetoFront front = non_dominated_filter(archive.entries(pool));
  std::vector<CountFingerprint> fps;
  fps.reserve(front.size());
  for (const auto& e : front.entries()) fps.push_back(pool[e.id].fingerprint);
  std::vector<std::size_t> out;
  out.reserve(config.circle_thresholds.size());
  for (double t : config.circle_thresholds) {
    out.push_back(n_circles(fps, t, config.circle_distance));
  }
  return out;
}

RunResult run(const CandidatePool& pool, const RunConfig& config) {
  RunResult result;
  result.config = config;
  RunState state = init_run(pool, config);
  result.initial_size = state.archive.size();
  {
    const ParetoFront front = non_dominated_filter(state.archive.entries(pool));
    result.initial_hv = hypervolume_exact(front, config.ref());
    result.initial_r2 =
        r2_indicator(state.archive.objectives(pool), state.directions);
  }
  result.records.reserve(config.rounds);
  for (std::size_t r = 0; r < config.rounds; ++r) {
    result.records.push_back(run_round(state, pool, config));
  }
  result.archive = state.archive;
  result.front = non_dominated_filter(state.archive.entries(pool));
  result.circles = circles_for_archive(pool, state.archive, config);
  return result;
}

SuiteResult run_suite(const CandidatePool& pool, const RunConfig& base,
                      const std::vector<std::uint64_t>& seeds,
                      const std::vector<AcquisitionKind>& methods) {
  if (seeds.empty()) throw std::invalid_argument("suite needs at least one seed");
  if (methods.empty()) {
    throw std::invalid_argument("suite needs at least one acquisition");
  }
  SuiteResult suite;
  suite.methods = methods;
  suite.seeds = seeds;
  suite.runs.resize(methods.size());
  for (std::size_t m = 0; m < methods.size(); ++m) {
    for (std::uint64_t seed : seeds) {
      RunConfig config = base;
      config.acquisition.kind = methods[m];
      config.master_seed = seed;
      suite.runs[m].push_back(run(pool, config));
    }
  }
  return suite;
}

}  // namespace mobo
