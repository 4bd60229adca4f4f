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


#include "mobo/fingerprint.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mobo {

CountFingerprint::CountFingerprint(std::vector<Entry> entries)
    : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto [id, count] = entries_[i];
    if (count == 0) {
      throw std::invalid_argument("fingerprint feature " + std::to_string(id) +
                                  " has zero count");
    }
    if (i > 0 && entries_[i - 1].first == id) {
      throw std::invalid_argument("fingerprint feature " + std::to_string(id) +
                                  " appears more than once");
    }
    total_ += count;
    squared_norm_ += static_cast<double>(count) * static_cast<double>(count);
  }
}

CountFingerprint::CountFingerprint(std::initializer_list<Entry> entries)
    : CountFingerprint(std::vector<Entry>(entries)) {}

FeatureCount CountFingerprint::count(FeatureId id) const noexcept {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), id,
      [](const Entry& e, FeatureId key) { return e.first < key; });
  return (it != entries_.end() && it->first == id) ? it->second : 0;
}

CountFingerprint CountFingerprint::binarized() const {
  std::vector<Entry> out;
  out.reserve(entries_.size());
  for (const auto& [id, count] : entries_) out.emplace_back(id, 1);
  return CountFingerprint(std::move(out));
}

std::string_view to_string(KernelKind kind) {
  return kind == KernelKind::kMinMax ? "minmax" : "tanimoto";
}

std::string_view to_string(DistanceKind kind) {
  return kind == DistanceKind::kMinMax ? "minmax" : "binary-tanimoto";
}

KernelKind parse_kernel_kind(std::string_view name) {
  if (name == "minmax") return KernelKind::kMinMax;
  if (name == "tanimoto") return KernelKind::kTanimoto;
  throw std::invalid_argument("unknown kernel '" + std::string(name) + "'");
}

DistanceKind parse_distance_kind(std::string_view name) {
  if (name == "minmax") return DistanceKind::kMinMax;
  if (name == "binary-tanimoto") return DistanceKind::kBinaryTanimoto;
  throw std::invalid_argument("unknown distance '" + std::string(name) + "'");
}

namespace {

// Walks the intersection of two sorted supports.
template <typename Fn>
void for_each_shared(const CountFingerprint& a, const CountFingerprint& b,
                     Fn&& fn) {
  auto ia = a.features().begin();
  auto ib = b.features().begin();
  const auto ea = a.features().end();
  const auto eb = b.features().end();
  while (ia != ea && ib != eb) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      fn(ia->second, ib->second);
      ++ia;
      ++ib;
    }
  }
}

}  // namespace

double minmax_kernel(const CountFingerprint& a, const CountFingerprint& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::uint64_t min_sum = 0;
  for_each_shared(a, b, [&](FeatureCount x, FeatureCount y) {
    min_sum += std::min(x, y);
  });
  // sum max = sum a + sum b - sum min, exact in integers.
  const std::uint64_t max_sum = a.total() + b.total() - min_sum;
  return static_cast<double>(min_sum) / static_cast<double>(max_sum);
}

double tanimoto_kernel(const CountFingerprint& a, const CountFingerprint& b) {
  if (a.empty() && b.empty()) return 1.0;
  double dot = 0.0;
  for_each_shared(a, b, [&](FeatureCount x, FeatureCount y) {
    dot += static_cast<double>(x) * static_cast<double>(y);
  });
  return dot / (a.squared_norm() + b.squared_norm() - dot);
}

double kernel_value(KernelKind kind, const CountFingerprint& a,
                    const CountFingerprint& b) {
  return kind == KernelKind::kMinMax ? minmax_kernel(a, b)
                                     : tanimoto_kernel(a, b);
}

double tanimoto_distance(const CountFingerprint& a, const CountFingerprint& b) {
  return 1.0 - minmax_kernel(a, b);
}

double distance_value(DistanceKind kind, const CountFingerprint& a,
                      const CountFingerprint& b) {
  if (kind == DistanceKind::kMinMax) return tanimoto_distance(a, b);
  return 1.0 - tanimoto_kernel(a.binarized(), b.binarized());
}

Eigen::MatrixXd kernel_matrix(std::span<const CountFingerprint> points,
                              KernelKind kind, double amplitude) {
  if (points.empty()) {
    throw std::invalid_argument("kernel_matrix: empty point set");
  }
  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd k(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double v = amplitude * kernel_value(kind, points[i], points[j]);
      k(i, j) = v;
      k(j, i) = v;
    }
  }
  return k;
}

Eigen::MatrixXd cross_kernel_matrix(std::span<const CountFingerprint> rows,
                                    std::span<const CountFingerprint> cols,
                                    KernelKind kind, double amplitude) {
  Eigen::MatrixXd k(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      k(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          amplitude * kernel_value(kind, rows[i], cols[j]);
    }
  }
  return k;
}

}  // namespace mobo
