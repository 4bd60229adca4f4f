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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mobo/fingerprint.hpp"
#include "mobo/pareto.hpp"

namespace mobo {

struct Molecule {
  std::string id;
  std::optional<std::string> smiles;
  CountFingerprint fingerprint;
  ObjectiveVector objectives;

  friend bool operator==(const Molecule&, const Molecule&) = default;
};

/// Fixed set of molecules the optimizer selects from. Pool indices are the
/// engine's candidate ids; string ids are kept for reporting.
class CandidatePool {
 public:
  CandidatePool() = default;
  /// Throws std::invalid_argument on repeated ids or mixed objective counts.
  explicit CandidatePool(std::vector<Molecule> molecules);

  std::size_t size() const noexcept { return molecules_.size(); }
  bool empty() const noexcept { return molecules_.empty(); }
  std::size_t dims() const noexcept {
    return molecules_.empty() ? 0 : molecules_.front().objectives.size();
  }
  const Molecule& operator[](std::size_t i) const { return molecules_[i]; }
  std::span<const Molecule> molecules() const noexcept { return molecules_; }
  std::optional<std::size_t> find(std::string_view id) const;

 private:
  std::vector<Molecule> molecules_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace mobo
