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


#include "mobo/pareto.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace mobo {

std::vector<ObjectiveVector> ParetoFront::points() const {
  std::vector<ObjectiveVector> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.values);
  return out;
}

std::vector<std::size_t> ParetoFront::ids() const {
  std::vector<std::size_t> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.id);
  return out;
}

namespace {

void check_dims(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("objective dimension mismatch: " +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  }
}

}  // namespace

bool weakly_dominates(std::span<const double> a, std::span<const double> b) {
  check_dims(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

bool dominates(std::span<const double> a, std::span<const double> b) {
  check_dims(a, b);
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
    if (a[i] > b[i]) strict = true;
  }
  return strict;
}

ParetoFront non_dominated_filter(std::span<const FrontEntry> points) {
  ParetoFront front;
  if (points.empty()) return front;

  const std::size_t d = points.front().values.size();
  std::unordered_set<std::size_t> seen;
  std::vector<double> sums(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].values.size() != d) {
      throw std::invalid_argument("non_dominated_filter: mixed dimensions");
    }
    if (!seen.insert(points[i].id).second) {
      throw std::invalid_argument("non_dominated_filter: repeated id " +
                                  std::to_string(points[i].id));
    }
    sums[i] = std::accumulate(points[i].values.begin(),
                              points[i].values.end(), 0.0);
  }

  // A dominator has a coordinate sum >= the dominated point's and is
  // lexicographically larger, so visiting in that order means a point only
  // needs checking against points already accepted.
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (sums[a] != sums[b]) return sums[a] > sums[b];
    if (points[a].values != points[b].values) {
      return points[a].values > points[b].values;
    }
    return a < b;
  });

  std::vector<std::size_t> kept;
  for (std::size_t idx : order) {
    const auto& p = points[idx].values;
    const bool dominated = std::any_of(
        kept.begin(), kept.end(),
        [&](std::size_t k) { return dominates(points[k].values, p); });
    if (!dominated) kept.push_back(idx);
  }

  std::sort(kept.begin(), kept.end());
  front.entries_.reserve(kept.size());
  for (std::size_t idx : kept) front.entries_.push_back(points[idx]);
  return front;
}

}  // namespace mobo
