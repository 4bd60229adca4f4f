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
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mobo/pool.hpp"

namespace mobo {

inline constexpr const char* kDatasetFormat = "mobo-dataset/1";

struct DatasetHeader {
  std::string format = kDatasetFormat;
  std::string task;
  std::vector<std::string> objective_names;
  std::size_t record_count = 0;
  /// Free-form provenance (generator parameters, toolkit versions, ...).
  nlohmann::json metadata = nlohmann::json::object();

  std::size_t dims() const noexcept { return objective_names.size(); }

  friend bool operator==(const DatasetHeader&, const DatasetHeader&) = default;
};

struct Dataset {
  DatasetHeader header;
  CandidatePool pool;
};

/// Parse or validation failure. line is 1-based; column is 1-based when
/// known and 0 otherwise.
class DatasetError : public std::runtime_error {
 public:
  DatasetError(std::size_t line, std::size_t column, std::string record_id,
               std::string field, const std::string& reason);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& record_id() const noexcept { return record_id_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string record_id_;
  std::string field_;
};

/// Reads and validates a line-delimited dataset: a header object on the
/// first line and one molecule record per following line.
Dataset load_dataset(const std::filesystem::path& path);
Dataset read_dataset(std::istream& in);

void write_dataset(const Dataset& dataset, const std::filesystem::path& path);
void write_dataset(const Dataset& dataset, std::ostream& out);

}  // namespace mobo
