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

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace mobo {

using FeatureId = std::uint64_t;
using FeatureCount = std::uint32_t;

/// Sparse count fingerprint: opaque 64-bit feature ids mapped to positive
/// occurrence counts. Features are kept sorted by id so that pairwise
/// similarities are a single linear merge.
class CountFingerprint {
 public:
  using Entry = std::pair<FeatureId, FeatureCount>;

  CountFingerprint() = default;

  /// Throws std::invalid_argument on a zero count or a repeated feature id.
  explicit CountFingerprint(std::vector<Entry> entries);
  CountFingerprint(std::initializer_list<Entry> entries);

  std::span<const Entry> features() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// Count of a feature, 0 when absent.
  FeatureCount count(FeatureId id) const noexcept;

  /// Sum of all counts (the L1 norm).
  std::uint64_t total() const noexcept { return total_; }
  /// Sum of squared counts.
  double squared_norm() const noexcept { return squared_norm_; }

  /// Copy with every count set to 1.
  CountFingerprint binarized() const;

  friend bool operator==(const CountFingerprint& a, const CountFingerprint& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Entry> entries_;
  std::uint64_t total_ = 0;
  double squared_norm_ = 0.0;
};

enum class KernelKind { kMinMax, kTanimoto };

/// Distance used for diversity packing: 1 - MinMax on counts, or 1 - Tanimoto
/// on binarized fingerprints.
enum class DistanceKind { kMinMax, kBinaryTanimoto };

std::string_view to_string(KernelKind kind);
std::string_view to_string(DistanceKind kind);
KernelKind parse_kernel_kind(std::string_view name);
DistanceKind parse_distance_kind(std::string_view name);

/// sum_i min(a_i, b_i) / sum_i max(a_i, b_i). Two empty fingerprints are
/// treated as identical and score 1.
double minmax_kernel(const CountFingerprint& a, const CountFingerprint& b);

/// a.b / (|a|^2 + |b|^2 - a.b) on the count vectors; same empty policy.
double tanimoto_kernel(const CountFingerprint& a, const CountFingerprint& b);

double kernel_value(KernelKind kind, const CountFingerprint& a,
                    const CountFingerprint& b);

/// 1 - minmax_kernel(a, b).
double tanimoto_distance(const CountFingerprint& a, const CountFingerprint& b);

double distance_value(DistanceKind kind, const CountFingerprint& a,
                      const CountFingerprint& b);

/// Gram matrix amplitude * k(x_i, x_j). Exactly symmetric: only the lower
/// triangle is evaluated and mirrored.
Eigen::MatrixXd kernel_matrix(std::span<const CountFingerprint> points,
                              KernelKind kind, double amplitude);

/// Cross-kernel block amplitude * k(rows_i, cols_j).
Eigen::MatrixXd cross_kernel_matrix(std::span<const CountFingerprint> rows,
                                    std::span<const CountFingerprint> cols,
                                    KernelKind kind, double amplitude);

}  // namespace mobo
