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
#include <span>
#include <vector>

namespace mobo {

/// Objective values under the maximization convention.
using ObjectiveVector = std::vector<double>;

/// Lower corner of the hypervolume region; componentwise <= the front.
using ReferencePoint = std::vector<double>;

struct FrontEntry {
  std::size_t id = 0;
  ObjectiveVector values;

  friend bool operator==(const FrontEntry&, const FrontEntry&) = default;
};

/// Mutually non-dominated entries with unique ids. Entries with identical
/// objective vectors may coexist.
class ParetoFront {
 public:
  ParetoFront() = default;

  std::span<const FrontEntry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  /// Objective dimension, 0 for an empty front.
  std::size_t dims() const noexcept {
    return entries_.empty() ? 0 : entries_.front().values.size();
  }
  std::vector<ObjectiveVector> points() const;
  std::vector<std::size_t> ids() const;

  friend bool operator==(const ParetoFront&, const ParetoFront&) = default;

 private:
  friend ParetoFront non_dominated_filter(std::span<const FrontEntry>);
  std::vector<FrontEntry> entries_;
};

/// a_i >= b_i for all i and a_i > b_i for some i. Throws
/// std::invalid_argument on a dimension mismatch.
bool dominates(std::span<const double> a, std::span<const double> b);

/// a_i >= b_i for all i.
bool weakly_dominates(std::span<const double> a, std::span<const double> b);

/// Every input not dominated by another input, in input order. Throws on
/// repeated ids or mixed dimensions.
ParetoFront non_dominated_filter(std::span<const FrontEntry> points);

}  // namespace mobo
