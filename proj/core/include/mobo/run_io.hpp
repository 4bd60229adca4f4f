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
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mobo/engine.hpp"

namespace mobo {

/// Shortest-safe decimal form with 17 significant digits; parses back to
/// the same double.
std::string format_double(double value);

/// CSV columns: round, selected_id, acq_score, obj_1..obj_d, hv, r2, wall_ms.
void write_round_log(std::span<const RunRecord> records, std::size_t d,
                     const std::filesystem::path& path);

struct RoundLog {
  std::size_t dims = 0;
  std::vector<RunRecord> records;
};
RoundLog read_round_log(const std::filesystem::path& path);

/// CSV columns: position, id, obj_1..obj_d (the initial design).
void write_initial_archive(const CandidatePool& pool, const Archive& archive,
                           std::size_t initial_size,
                           const std::filesystem::path& path);

struct InitialArchive {
  std::vector<std::string> ids;
  std::vector<ObjectiveVector> objectives;
};
InitialArchive read_initial_archive(const std::filesystem::path& path);

nlohmann::json to_json(const RunConfig& config);
/// Inverse of to_json; missing keys keep RunConfig defaults.
RunConfig run_config_from_json(const nlohmann::json& j);

/// Final metrics of one run: HV, R2, #Circles, front and archive ids.
nlohmann::json run_result_json(const RunResult& result,
                               const CandidatePool& pool);

}  // namespace mobo
