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


#include "mobo/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_map>

namespace mobo {

namespace {

std::string describe(std::size_t line, std::size_t column,
                     const std::string& record_id, const std::string& field,
                     const std::string& reason) {
  std::ostringstream os;
  os << "line " << line;
  if (column > 0) os << ", column " << column;
  if (!record_id.empty()) os << ", record '" << record_id << "'";
  if (!field.empty()) os << ", field '" << field << "'";
  os << ": " << reason;
  return os.str();
}

using json = nlohmann::json;

json parse_line(const std::string& text, std::size_t line) {
  try {
    json value = json::parse(text);
    if (!value.is_object()) {
      throw DatasetError(line, 1, "", "", "expected a JSON object");
    }
    return value;
  } catch (const json::parse_error& e) {
    throw DatasetError(line, e.byte, "", "", "malformed JSON");
  }
}

DatasetHeader parse_header(const json& j, std::size_t line) {
  auto fail = [&](const std::string& field, const std::string& reason) {
    return DatasetError(line, 0, "", field, reason);
  };
  DatasetHeader h;
  if (!j.contains("format") || !j["format"].is_string()) {
    throw fail("format", "missing format tag");
  }
  h.format = j["format"].get<std::string>();
  if (h.format != kDatasetFormat) {
    throw fail("format", "unsupported format '" + h.format + "', expected " +
                             kDatasetFormat);
  }
  if (!j.contains("task") || !j["task"].is_string()) {
    throw fail("task", "missing task name");
  }
  h.task = j["task"].get<std::string>();
  if (!j.contains("objectives") || !j["objectives"].is_array()) {
    throw fail("objectives", "missing objective name list");
  }
  std::set<std::string> seen;
  for (const auto& name : j["objectives"]) {
    if (!name.is_string()) throw fail("objectives", "names must be strings");
    auto s = name.get<std::string>();
    if (!seen.insert(s).second) {
      throw fail("objectives", "duplicate objective name '" + s + "'");
    }
    h.objective_names.push_back(std::move(s));
  }
  if (h.objective_names.size() < 2) {
    throw fail("objectives", "need at least two objectives");
  }
  if (j.contains("d")) {
    if (!j["d"].is_number_unsigned() ||
        j["d"].get<std::size_t>() != h.objective_names.size()) {
      throw fail("d", "does not match the number of objective names");
    }
  }
  if (!j.contains("records") || !j["records"].is_number_unsigned()) {
    throw fail("records", "missing record count");
  }
  h.record_count = j["records"].get<std::size_t>();
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) throw fail("metadata", "must be an object");
    h.metadata = j["metadata"];
  }
  return h;
}

Molecule parse_record(const json& j, std::size_t line, std::size_t d) {
  Molecule m;
  if (!j.contains("id") || !j["id"].is_string() ||
      j["id"].get<std::string>().empty()) {
    throw DatasetError(line, 0, "", "id", "missing or empty id");
  }
  m.id = j["id"].get<std::string>();
  auto fail = [&](const std::string& field, const std::string& reason) {
    return DatasetError(line, 0, m.id, field, reason);
  };

  if (j.contains("smiles") && !j["smiles"].is_null()) {
    if (!j["smiles"].is_string()) throw fail("smiles", "must be a string");
    m.smiles = j["smiles"].get<std::string>();
  }

  if (!j.contains("fingerprint") || !j["fingerprint"].is_object()) {
    throw fail("fingerprint", "missing fingerprint object");
  }
  std::vector<CountFingerprint::Entry> entries;
  for (const auto& [key, value] : j["fingerprint"].items()) {
    FeatureId id = 0;
    const auto* first = key.data();
    const auto* last = key.data() + key.size();
    const auto [ptr, ec] = std::from_chars(first, last, id);
    if (key.empty() || ec != std::errc() || ptr != last) {
      throw fail("fingerprint", "feature id '" + key +
                                    "' is not an unsigned 64-bit integer");
    }
    if (!value.is_number_integer() || value.get<std::int64_t>() <= 0 ||
        value.get<std::int64_t>() >
            std::numeric_limits<FeatureCount>::max()) {
      throw fail("fingerprint", "count for feature " + key +
                                    " must be a positive integer");
    }
    entries.emplace_back(id, static_cast<FeatureCount>(value.get<std::int64_t>()));
  }
  if (entries.empty()) throw fail("fingerprint", "fingerprint is empty");
  m.fingerprint = CountFingerprint(std::move(entries));

  if (!j.contains("objectives") || !j["objectives"].is_array()) {
    throw fail("objectives", "missing objective array");
  }
  const auto& objs = j["objectives"];
  if (objs.size() != d) {
    throw fail("objectives", "has " + std::to_string(objs.size()) +
                                 " values, expected " + std::to_string(d));
  }
  for (const auto& v : objs) {
    if (!v.is_number()) throw fail("objectives", "values must be numbers");
    const double x = v.get<double>();
    if (!std::isfinite(x) || x < 0.0 || x > 1.0) {
      std::ostringstream os;
      os << "value " << x << " outside [0, 1]";
      throw fail("objectives", os.str());
    }
    m.objectives.push_back(x);
  }
  return m;
}

}  // namespace

DatasetError::DatasetError(std::size_t line, std::size_t column,
                           std::string record_id, std::string field,
                           const std::string& reason)
    : std::runtime_error(describe(line, column, record_id, field, reason)),
      line_(line),
      column_(column),
      record_id_(std::move(record_id)),
      field_(std::move(field)) {}

Dataset read_dataset(std::istream& in) {
  std::string text;
  std::size_t line = 0;
  std::optional<DatasetHeader> header;
  std::vector<Molecule> molecules;
  std::unordered_map<std::string, std::size_t> first_seen;

  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.find_first_not_of(" \t") == std::string::npos) continue;
    const json j = parse_line(text, line);
    if (!header) {
      header = parse_header(j, line);
      continue;
    }
    Molecule m = parse_record(j, line, header->dims());
    if (auto [it, fresh] = first_seen.emplace(m.id, line); !fresh) {
      throw DatasetError(line, 0, m.id, "id",
                         "duplicate id (first seen on line " +
                             std::to_string(it->second) + ")");
    }
    molecules.push_back(std::move(m));
  }
  if (!header) throw DatasetError(line + 1, 0, "", "", "missing header line");
  if (molecules.size() != header->record_count) {
    throw DatasetError(line + 1, 0, "", "records",
                       "header declares " +
                           std::to_string(header->record_count) +
                           " records, file has " +
                           std::to_string(molecules.size()));
  }
  if (molecules.empty()) {
    throw DatasetError(line + 1, 0, "", "records", "dataset has no records");
  }
  return Dataset{std::move(*header), CandidatePool(std::move(molecules))};
}

Dataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open dataset '" + path.string() + "'");
  }
  return read_dataset(in);
}

void write_dataset(const Dataset& dataset, std::ostream& out) {
  const auto& h = dataset.header;
  json header = {{"format", h.format},
                 {"task", h.task},
                 {"objectives", h.objective_names},
                 {"d", h.dims()},
                 {"records", dataset.pool.size()}};
  if (!h.metadata.empty()) header["metadata"] = h.metadata;
  out << header.dump() << '\n';
  for (const auto& m : dataset.pool.molecules()) {
    json fp = json::object();
    for (const auto& [id, count] : m.fingerprint.features()) {
      fp[std::to_string(id)] = count;
    }
    json rec = {{"id", m.id}, {"fingerprint", std::move(fp)},
                {"objectives", m.objectives}};
    if (m.smiles) rec["smiles"] = *m.smiles;
    out << rec.dump() << '\n';
  }
}

void write_dataset(const Dataset& dataset, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write dataset '" + path.string() + "'");
  }
  write_dataset(dataset, out);
  if (!out) {
    throw std::runtime_error("error writing dataset '" + path.string() + "'");
  }
}

}  // namespace mobo
