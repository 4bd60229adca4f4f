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
#include <vector>

#include "mobo/fingerprint.hpp"
#include "mobo/pareto.hpp"

namespace mobo {

/// Reference directions on the probability simplex plus the utopian point
/// they are measured from.
struct DirectionSet {
  std::vector<std::vector<double>> directions;
  ObjectiveVector utopian;

  /// Throws std::invalid_argument on an empty set, negative entries, sums
  /// off by more than 1e-12, or a dimension mismatch with the utopian point.
  void validate() const;
};

/// Simplex lattice {k / H : sum k = H}, in lexicographic order of the
/// integer compositions. Utopian point defaults to all ones.
DirectionSet generate_directions(std::size_t d, std::size_t granularity);

/// max_i v_i |u_i - s_i|.
double weighted_chebyshev(std::span<const double> solution,
                          std::span<const double> direction,
                          std::span<const double> utopian);

/// Mean over directions of the best (smallest) weighted Chebyshev deviation
/// among `solutions`. Lower is better.
double r2_indicator(std::span<const ObjectiveVector> solutions,
                    const DirectionSet& dirs);

/// Greedy sphere packing in input order: a fingerprint is accepted when its
/// distance to every accepted fingerprint exceeds `threshold`.
std::size_t n_circles(std::span<const CountFingerprint> fps, double threshold,
                      DistanceKind distance = DistanceKind::kMinMax);

/// Default threshold sweep 0.50, 0.55, ..., 0.90.
std::vector<double> default_circle_thresholds();

/// Mean difference over the Bessel-corrected pooled standard deviation.
/// Throws std::domain_error when the pooled variance is zero.
double cohens_d(std::span<const double> a, std::span<const double> b);

/// (#{a > b} - #{a < b}) / (|a| |b|) over all cross pairs.
double cliffs_delta(std::span<const double> a, std::span<const double> b);

struct EffectSizeReport {
  std::optional<double> cohens_d;  ///< empty when undefined
  double cliffs_delta = 0.0;
};

EffectSizeReport effect_sizes(std::span<const double> a,
                              std::span<const double> b);

/// Exact hypervolume of each front.
std::vector<double> hvi_curve(std::span<const ParetoFront> round_fronts,
                              std::span<const double> ref);

double mean(std::span<const double> xs);
/// Bessel-corrected sample standard deviation; 0 for fewer than two values.
double sample_stddev(std::span<const double> xs);

}  // namespace mobo
