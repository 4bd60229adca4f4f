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


#include "mobo/hypervolume.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace mobo {

UnsupportedDimension::UnsupportedDimension(std::size_t d)
    : std::invalid_argument("exact hypervolume supports d <= 3, got d = " +
                            std::to_string(d) + "; use hypervolume_mc") {}

namespace {

using Point2 = std::array<double, 2>;
using Point3 = std::array<double, 3>;

double volume_1d(const std::vector<double>& pts, double ref) {
  double best = ref;
  for (double v : pts) best = std::max(best, v);
  return best - ref;
}

// Staircase of mutually non-dominated 2-d points, x strictly increasing and
// y strictly decreasing. Maintains its dominated area against a fixed ref.
class Staircase {
 public:
  Staircase(double rx, double ry) : rx_(rx), ry_(ry) {}

  void clear() { steps_.clear(); }

  void insert(double x, double y) {
    auto pos = std::lower_bound(
        steps_.begin(), steps_.end(), x,
        [](const Point2& p, double key) { return p[0] < key; });
    if (pos != steps_.end() && pos->at(1) >= y) return;  // covered
    if (pos != steps_.end() && pos->at(0) == x) pos = steps_.erase(pos);
    auto first = pos;
    while (first != steps_.begin() && std::prev(first)->at(1) <= y) --first;
    pos = steps_.erase(first, pos);
    steps_.insert(pos, Point2{x, y});
  }

  double area() const {
    double total = 0.0;
    double prev_x = rx_;
    for (const auto& p : steps_) {
      total += (p[0] - prev_x) * (p[1] - ry_);
      prev_x = p[0];
    }
    return total;
  }

 private:
  double rx_, ry_;
  std::vector<Point2> steps_;
};

double volume_2d(const std::vector<double>& flat, std::span<const double> ref) {
  const std::size_t n = flat.size() / 2;
  thread_local std::vector<Point2> pts;
  pts.resize(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = {flat[2 * i], flat[2 * i + 1]};
  std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
    return a[0] != b[0] ? a[0] > b[0] : a[1] > b[1];
  });
  double area = 0.0;
  double y_max = ref[1];
  for (std::size_t i = 0; i < n; ++i) {
    if (pts[i][1] > y_max) {
      area += (pts[i][0] - ref[0]) * (pts[i][1] - y_max);
      y_max = pts[i][1];
    }
  }
  return area;
}

// Slices along the third axis from the top down; each slab's cross-section
// is the 2-d staircase of every point at or above it.
double volume_3d(const std::vector<double>& flat,
                 std::span<const double> ref) {
  const std::size_t n = flat.size() / 3;
  thread_local std::vector<Point3> pts;
  pts.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    pts[i] = {flat[3 * i], flat[3 * i + 1], flat[3 * i + 2]};
  }
  std::sort(pts.begin(), pts.end(),
            [](const Point3& a, const Point3& b) { return a[2] > b[2]; });
  Staircase stairs(ref[0], ref[1]);
  double volume = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    stairs.insert(pts[i][0], pts[i][1]);
    const double next_z = (i + 1 < n) ? pts[i + 1][2] : ref[2];
    const double depth = pts[i][2] - next_z;
    if (depth > 0.0) volume += stairs.area() * depth;
  }
  return volume;
}

}  // namespace

namespace detail {

double hypervolume_flat(std::vector<double>& pts, std::size_t d,
                        std::span<const double> ref) {
  if (d > 3) throw UnsupportedDimension(d);
  if (ref.size() != d) {
    throw std::invalid_argument("reference point dimension mismatch");
  }
  if (d == 0) return 0.0;
  // Clip to ref and drop points with an empty box.
  std::size_t kept = 0;
  const std::size_t n = pts.size() / d;
  for (std::size_t i = 0; i < n; ++i) {
    bool positive = true;
    for (std::size_t k = 0; k < d; ++k) {
      if (!(pts[i * d + k] > ref[k])) positive = false;
    }
    if (!positive) continue;
    for (std::size_t k = 0; k < d; ++k) pts[kept * d + k] = pts[i * d + k];
    ++kept;
  }
  pts.resize(kept * d);
  if (kept == 0) return 0.0;
  switch (d) {
    case 1:
      return volume_1d(pts, ref[0]);
    case 2:
      return volume_2d(pts, ref);
    default:
      return volume_3d(pts, ref);
  }
}

}  // namespace detail

double hypervolume_exact(std::span<const ObjectiveVector> points,
                         std::span<const double> ref) {
  const std::size_t d = ref.size();
  if (d > 3) throw UnsupportedDimension(d);
  std::vector<double> flat;
  flat.reserve(points.size() * d);
  for (const auto& p : points) {
    if (p.size() != d) {
      throw std::invalid_argument("hypervolume: point/reference dimension mismatch");
    }
    flat.insert(flat.end(), p.begin(), p.end());
  }
  return detail::hypervolume_flat(flat, d, ref);
}

double hypervolume_exact(const ParetoFront& front,
                         std::span<const double> ref) {
  const auto pts = front.points();
  return hypervolume_exact(pts, ref);
}

McEstimate hypervolume_mc(const ParetoFront& front, std::span<const double> ref,
                          std::span<const double> bound, std::size_t samples,
                          std::mt19937_64& rng) {
  if (samples == 0) throw std::invalid_argument("hypervolume_mc: zero samples");
  if (bound.size() != ref.size()) {
    throw std::invalid_argument("hypervolume_mc: bound/reference mismatch");
  }
  const std::size_t d = ref.size();
  if (front.empty()) return {};
  if (front.dims() != d) {
    throw std::invalid_argument("hypervolume_mc: front/reference mismatch");
  }
  double box = 1.0;
  for (std::size_t k = 0; k < d; ++k) {
    if (bound[k] < ref[k]) {
      throw std::invalid_argument("hypervolume_mc: bound below reference");
    }
    box *= bound[k] - ref[k];
  }
  for (const auto& e : front.entries()) {
    for (std::size_t k = 0; k < d; ++k) {
      if (e.values[k] > bound[k]) {
        throw std::invalid_argument("hypervolume_mc: front exceeds bound");
      }
    }
  }

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> sample(d);
  std::size_t hits = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t k = 0; k < d; ++k) {
      sample[k] = ref[k] + unit(rng) * (bound[k] - ref[k]);
    }
    for (const auto& e : front.entries()) {
      if (weakly_dominates(e.values, sample)) {
        ++hits;
        break;
      }
    }
  }
  const double n = static_cast<double>(samples);
  const double frac = static_cast<double>(hits) / n;
  return {box * frac, box * std::sqrt(frac * (1.0 - frac) / n)};
}

HypervolumeImprovement::HypervolumeImprovement(
    std::span<const ObjectiveVector> front, std::span<const double> ref)
    : dims_(ref.size()), ref_(ref.begin(), ref.end()) {
  if (dims_ > 3) throw UnsupportedDimension(dims_);
  front_.reserve(front.size() * dims_);
  for (const auto& p : front) {
    if (p.size() != dims_) {
      throw std::invalid_argument("hv_improvement: front/reference mismatch");
    }
    bool positive = true;
    for (std::size_t k = 0; k < dims_; ++k) {
      if (!(p[k] > ref_[k])) positive = false;
    }
    if (positive) front_.insert(front_.end(), p.begin(), p.end());
  }
  scratch_.reserve(front_.size());
}

bool HypervolumeImprovement::covered(std::span<const double> point) const {
  const std::size_t n = dims_ == 0 ? 0 : front_.size() / dims_;
  for (std::size_t i = 0; i < n; ++i) {
    const double* f = front_.data() + i * dims_;
    bool all = true;
    for (std::size_t k = 0; k < dims_; ++k) {
      if (f[k] < point[k]) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

double HypervolumeImprovement::operator()(std::span<const double> candidate) {
  if (candidate.size() != dims_) {
    throw std::invalid_argument("hv_improvement: candidate dimension mismatch");
  }
  double box = 1.0;
  for (std::size_t k = 0; k < dims_; ++k) {
    if (!(candidate[k] > ref_[k])) return 0.0;
    box *= candidate[k] - ref_[k];
  }
  if (covered(candidate)) return 0.0;

  // Volume newly covered = box [ref, c] minus the part of it the front
  // already dominates, i.e. the front clipped into the box.
  const std::size_t n = front_.size() / dims_;
  scratch_.clear();
  for (std::size_t i = 0; i < n; ++i) {
    const double* f = front_.data() + i * dims_;
    for (std::size_t k = 0; k < dims_; ++k) {
      scratch_.push_back(std::min(f[k], candidate[k]));
    }
  }
  const double covered_volume =
      detail::hypervolume_flat(scratch_, dims_, ref_);
  return std::max(0.0, box - covered_volume);
}

double hv_improvement(const ParetoFront& front,
                      std::span<const double> candidate,
                      std::span<const double> ref) {
  const auto pts = front.points();
  HypervolumeImprovement hvi(pts, ref);
  return hvi(candidate);
}

}  // namespace mobo
