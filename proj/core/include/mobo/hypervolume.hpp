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
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "mobo/pareto.hpp"

namespace mobo {

/// Raised by the exact routines for more than three objectives.
class UnsupportedDimension : public std::invalid_argument {
 public:
  explicit UnsupportedDimension(std::size_t d);
};

/// Exact dominated volume of the union of boxes [ref, p], for d <= 3.
/// Coordinates below the reference are clipped to it.
double hypervolume_exact(std::span<const ObjectiveVector> points,
                         std::span<const double> ref);
double hypervolume_exact(const ParetoFront& front, std::span<const double> ref);

struct McEstimate {
  double value = 0.0;
  double standard_error = 0.0;
};

/// Uniform sampling over the box [ref, bound]; any dimension.
McEstimate hypervolume_mc(const ParetoFront& front, std::span<const double> ref,
                          std::span<const double> bound, std::size_t samples,
                          std::mt19937_64& rng);

/// HV(front + candidate) - HV(front); zero when the candidate is weakly
/// dominated by a front point. d <= 3.
double hv_improvement(const ParetoFront& front,
                      std::span<const double> candidate,
                      std::span<const double> ref);

/// Reusable improvement evaluator for one (front, ref) pair. Holds scratch
/// buffers, so one instance per thread.
class HypervolumeImprovement {
 public:
  HypervolumeImprovement(std::span<const ObjectiveVector> front,
                         std::span<const double> ref);

  std::size_t dims() const noexcept { return dims_; }

  /// Improvement of adding `candidate`; candidate.size() must equal dims().
  double operator()(std::span<const double> candidate);

  /// True when some front point weakly dominates `point`.
  bool covered(std::span<const double> point) const;

 private:
  std::size_t dims_;
  std::vector<double> ref_;
  std::vector<double> front_;  // row-major, only points strictly above ref
  std::vector<double> scratch_;
};

namespace detail {
// Exact volume for points stored row-major in `pts` (modified in place:
// clipped and reordered).
double hypervolume_flat(std::vector<double>& pts, std::size_t d,
                        std::span<const double> ref);
}  // namespace detail

}  // namespace mobo
