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


#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mobo/acquisition.hpp"
#include "mobo/fingerprint.hpp"
#include "mobo/gp.hpp"
#include "mobo/metrics.hpp"
#include "mobo/pareto.hpp"
#include "mobo/pool.hpp"
#include "mobo/random.hpp"

namespace mobo {

struct RunConfig {
  AcquisitionConfig acquisition;  ///< also carries the reference point
  std::size_t rounds = 200;
  std::size_t init_size = 10;
  std::uint64_t master_seed = 0;
  GPHyperparams gp;
  KernelKind kernel = KernelKind::kMinMax;
  std::size_t direction_granularity = 12;
  ObjectiveVector utopian;  ///< empty means all ones
  std::vector<double> circle_thresholds = default_circle_thresholds();
  DistanceKind circle_distance = DistanceKind::kMinMax;
  /// Worker threads for candidate scoring; the selection does not depend on it.
  std::size_t threads = 1;
  /// Store measured wall time in records; zero otherwise so logs stay
  /// byte-reproducible.
  bool record_wall_time = false;

  const ReferencePoint& ref() const { return acquisition.ref; }

  /// Checks invariants against the pool. rounds may be 0 here.
  void validate(const CandidatePool& pool) const;
};

/// Fills unset defaults for a pool of dimension d: zero reference point,
/// uniform weights, all-ones utopian point.
RunConfig resolve_defaults(RunConfig config, std::size_t d);

/// Evaluated molecules in insertion order.
class Archive {
 public:
  Archive() = default;
  explicit Archive(std::size_t pool_size) : member_(pool_size, false) {}

  /// Throws std::logic_error if `pool_index` is already present.
  void add(std::size_t pool_index);
  bool contains(std::size_t pool_index) const {
    return pool_index < member_.size() && member_[pool_index];
  }
  std::size_t size() const noexcept { return order_.size(); }
  const std::vector<std::size_t>& indices() const noexcept { return order_; }

  std::vector<FrontEntry> entries(const CandidatePool& pool) const;
  std::vector<ObjectiveVector> objectives(const CandidatePool& pool) const;
  std::vector<CountFingerprint> fingerprints(const CandidatePool& pool) const;

  friend bool operator==(const Archive&, const Archive&) = default;

 private:
  std::vector<std::size_t> order_;
  std::vector<bool> member_;
};

struct RunRecord {
  std::size_t round = 0;
  std::string selected_id;
  double acq_score = 0.0;
  ObjectiveVector objectives;
  double hv = 0.0;
  double r2 = 0.0;
  double wall_ms = 0.0;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// Everything that carries from one round to the next.
struct RunState {
  Archive archive;
  std::optional<MultiObjectiveSurrogate> surrogate;
  /// amplitude * k(pool_i, archive_j), one column per archive entry.
  Eigen::MatrixXd cross_kernel;
  Eigen::VectorXd prior_variance;  ///< amplitude * k(pool_i, pool_i)
  DirectionSet directions;
  Rng random_stream;
  std::size_t round = 0;
};

/// Draws the initial design and prepares the state. Throws on invalid
/// configuration or init_size > pool size.
RunState init_run(const CandidatePool& pool, const RunConfig& config);

/// Scores every unevaluated candidate, selects the argmax (lowest pool
/// index on ties), evaluates it by lookup and updates archive and surrogate.
/// Throws std::runtime_error when the pool is exhausted.
RunRecord run_round(RunState& state, const CandidatePool& pool,
                    const RunConfig& config);

/// Acquisition scores for the unevaluated candidates in ascending pool
/// order; exposed for testing and benchmarking.
struct CandidateScores {
  std::vector<std::size_t> candidates;
  std::vector<double> scores;
};
CandidateScores score_candidates(RunState& state, const CandidatePool& pool,
                                 const RunConfig& config);

/// Index of the largest score, lowest position on ties.
std::size_t argmax_lowest_index(const std::vector<double>& scores);

struct RunResult {
  RunConfig config;
  std::vector<RunRecord> records;
  Archive archive;
  std::size_t initial_size = 0;
  ParetoFront front;  ///< ids are pool indices
  double initial_hv = 0.0;
  double initial_r2 = 0.0;
  std::vector<std::size_t> circles;  ///< one per config.circle_thresholds

  double final_hv() const { return records.empty() ? initial_hv : records.back().hv; }
  double final_r2() const { return records.empty() ? initial_r2 : records.back().r2; }
};

RunResult run(const CandidatePool& pool, const RunConfig& config);

/// #Circles of the Pareto-optimal archive members, in archive order.
std::vector<std::size_t> circles_for_archive(const CandidatePool& pool,
                                             const Archive& archive,
                                             const RunConfig& config);

struct SuiteResult {
  std::string task;
  std::vector<std::string> objective_names;
  std::vector<AcquisitionKind> methods;
  std::vector<std::uint64_t> seeds;
  /// runs[m][s] for methods[m], seeds[s].
  std::vector<std::vector<RunResult>> runs;
};

/// Runs every (acquisition, seed) pair with the base configuration.
SuiteResult run_suite(const CandidatePool& pool, const RunConfig& base,
                      const std::vector<std::uint64_t>& seeds,
                      const std::vector<AcquisitionKind>& methods);

}  // namespace mobo
