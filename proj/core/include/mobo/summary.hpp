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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mobo/acquisition.hpp"
#include "mobo/engine.hpp"
#include "mobo/metrics.hpp"

namespace mobo {

/// Final metrics of one (method, seed) trial.
struct RunOutcome {
  AcquisitionKind method = AcquisitionKind::kEhvi;
  std::uint64_t seed = 0;
  std::size_t rounds = 0;
  double final_hv = 0.0;
  double final_r2 = 0.0;
  std::vector<double> circle_thresholds;
  std::vector<std::size_t> circles;
};

RunOutcome outcome_of(const RunResult& result);

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

struct MethodSummary {
  AcquisitionKind method = AcquisitionKind::kEhvi;
  std::vector<std::uint64_t> seeds;
  std::vector<double> final_hv;
  std::vector<double> final_r2;
  MeanStd hv;
  MeanStd r2;
  std::vector<MeanStd> circles;  ///< one per threshold
};

struct PairwiseEffect {
  AcquisitionKind first = AcquisitionKind::kEhvi;
  AcquisitionKind second = AcquisitionKind::kScalarizedEi;
  EffectSizeReport hv;
  EffectSizeReport r2;
};

struct SuiteSummary {
  std::string task;
  std::size_t rounds = 0;
  std::vector<double> circle_thresholds;
  std::vector<MethodSummary> methods;
  std::vector<PairwiseEffect> effects;  ///< empty for a single method
  bool degenerate = false;              ///< fewer than two seeds per method
};

/// Groups outcomes by method (in first-seen order) and computes mean / std
/// and pairwise effect sizes. Methods need matching threshold sweeps.
SuiteSummary summarize(const std::string& task,
                       const std::vector<RunOutcome>& outcomes);
SuiteSummary summarize(const SuiteResult& suite);

/// Display name used in tables: "EHVI", "Scalarized EI", "Random".
std::string display_name(AcquisitionKind kind);

void write_summary_text(const SuiteSummary& summary, std::ostream& out);
nlohmann::json summary_json(const SuiteSummary& summary);

/// Writes <stem>.txt and <stem>.json side by side.
void write_summary(const SuiteSummary& summary,
                   const std::filesystem::path& stem);

}  // namespace mobo
