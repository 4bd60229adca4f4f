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


#include "mobo/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mobo/hypervolume.hpp"

namespace mobo {

void DirectionSet::validate() const {
  if (directions.empty()) throw std::invalid_argument("empty direction set");
  for (const auto& v : directions) {
    if (v.size() != utopian.size()) {
      throw std::invalid_argument("direction/utopian dimension mismatch");
    }
    double sum = 0.0;
    for (double x : v) {
      if (!(x >= 0.0)) throw std::invalid_argument("negative direction entry");
      sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw std::invalid_argument("direction does not sum to 1");
    }
  }
}

namespace {

void compositions(std::size_t d, std::size_t remaining,
                  std::vector<std::size_t>& prefix,
                  std::vector<std::vector<std::size_t>>& out) {
  if (prefix.size() + 1 == d) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::size_t k = 0; k <= remaining; ++k) {
    prefix.push_back(k);
    compositions(d, remaining - k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

DirectionSet generate_directions(std::size_t d, std::size_t granularity) {
  if (d < 2) throw std::invalid_argument("directions need d >= 2");
  if (granularity < 1) throw std::invalid_argument("granularity must be >= 1");
  std::vector<std::vector<std::size_t>> parts;
  std::vector<std::size_t> prefix;
  compositions(d, granularity, prefix, parts);

  DirectionSet set;
  set.utopian.assign(d, 1.0);
  const double h = static_cast<double>(granularity);
  for (const auto& p : parts) {
    std::vector<double> v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = static_cast<double>(p[i]) / h;
    set.directions.push_back(std::move(v));
  }
  return set;
}

double weighted_chebyshev(std::span<const double> solution,
                          std::span<const double> direction,
                          std::span<const double> utopian) {
  if (solution.size() != direction.size() ||
      solution.size() != utopian.size()) {
    throw std::invalid_argument("R2: dimension mismatch");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < solution.size(); ++i) {
    worst = std::max(worst, direction[i] * std::abs(utopian[i] - solution[i]));
  }
  return worst;
}

double r2_indicator(std::span<const ObjectiveVector> solutions,
                    const DirectionSet& dirs) {
  if (solutions.empty()) throw std::invalid_argument("R2: empty solution set");
  if (dirs.directions.empty()) throw std::invalid_argument("R2: no directions");
  double total = 0.0;
  for (const auto& v : dirs.directions) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : solutions) {
      best = std::min(best, weighted_chebyshev(s, v, dirs.utopian));
    }
    total += best;
  }
  return total / static_cast<double>(dirs.directions.size());
}

std::size_t n_circles(std::span<const CountFingerprint> fps, double threshold,
                      DistanceKind distance) {
  std::vector<const CountFingerprint*> accepted;
  for (const auto& fp : fps) {
    const bool far = std::all_of(
        accepted.begin(), accepted.end(), [&](const CountFingerprint* other) {
          return distance_value(distance, fp, *other) > threshold;
        });
    if (far) accepted.push_back(&fp);
  }
  return accepted.size();
}

std::vector<double> default_circle_thresholds() {
  std::vector<double> out;
  for (int step = 10; step <= 18; ++step) out.push_back(step / 20.0);
  return out;
}

namespace {

// Sum of squared deviations from the mean. A constant sample gives exactly
// zero even when its floating-point mean is off by an ulp.
double squared_deviations(std::span<const double> xs, double m) {
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  if (lo == xs.end() || *lo == *hi) return 0.0;
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return ss;
}

}  // namespace

double mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  return std::accumulate(xs.begin(), xs.end(), 0.0) /
         static_cast<double>(xs.size());
}

double sample_stddev(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  return std::sqrt(squared_deviations(xs, mean(xs)) /
                   static_cast<double>(xs.size() - 1));
}

double cohens_d(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) {
    throw std::invalid_argument("Cohen's d needs at least two values per sample");
  }
  const double ma = mean(a);
  const double mb = mean(b);
  const double ssa = squared_deviations(a, ma);
  const double ssb = squared_deviations(b, mb);
  const double dof = static_cast<double>(a.size() + b.size() - 2);
  const double pooled = std::sqrt((ssa + ssb) / dof);
  if (pooled == 0.0) {
    throw std::domain_error("Cohen's d undefined: zero pooled variance");
  }
  return (ma - mb) / pooled;
}

double cliffs_delta(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("Cliff's delta needs non-empty samples");
  }
  long long balance = 0;
  for (double x : a) {
    for (double y : b) {
      if (x > y) ++balance;
      if (x < y) --balance;
    }
  }
  return static_cast<double>(balance) /
         (static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

EffectSizeReport effect_sizes(std::span<const double> a,
                              std::span<const double> b) {
  EffectSizeReport report;
  report.cliffs_delta = cliffs_delta(a, b);
  if (a.size() >= 2 && b.size() >= 2) {
    try {
      report.cohens_d = cohens_d(a, b);
    } catch (const std::domain_error&) {
      // zero pooled variance: left undefined
    }
  }
  return report;
}

std::vector<double> hvi_curve(std::span<const ParetoFront> round_fronts,
                              std::span<const double> ref) {
  std::vector<double> curve;
  curve.reserve(round_fronts.size());
  for (const auto& front : round_fronts) {
    curve.push_back(hypervolume_exact(front, ref));
  }
  return curve;
}

}  // namespace mobo
