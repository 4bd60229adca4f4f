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
#include <cstdint>
#include <span>
#include <vector>

#include "mobo/dataset.hpp"
#include "mobo/fingerprint.hpp"

namespace mobo {

struct SyntheticParams {
  std::uint64_t seed = 1;
  std::size_t n = 1000;
  std::size_t d = 3;
  std::size_t n_features = 64;  ///< vocabulary size
  double density = 0.3;         ///< per-feature inclusion probability
};

struct SyntheticDataset {
  Dataset dataset;
  std::vector<CountFingerprint> anchors;
};

/// Random sparse count fingerprints scored by MinMax similarity to d anchor
/// fingerprints drawn first from the same distribution. A candidate close to
/// one anchor is usually far from the others, so the objectives conflict.
/// Counts are 1 + Geometric(1/2) capped at 8. Deterministic per parameter
/// set.
SyntheticDataset generate_synthetic(const SyntheticParams& params);

/// Objective j = minmax_kernel(fp, anchors[j]).
std::vector<double> anchor_objectives(const CountFingerprint& fp,
                                      std::span<const CountFingerprint> anchors);

}  // namespace mobo
