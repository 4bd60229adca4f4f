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


#include "mobo/synthetic.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <unordered_set>

#include "mobo/random.hpp"

namespace mobo {

namespace {

constexpr FeatureCount kMaxCount = 8;

// 1 + Geometric(1/2), capped.
FeatureCount draw_count(Rng& rng) {
  FeatureCount c = 1;
  while (c < kMaxCount && uniform01(rng) < 0.5) ++c;
  return c;
}

std::size_t draw_index(Rng& rng, std::size_t n) {
  return std::min(n - 1, static_cast<std::size_t>(uniform01(rng) * n));
}

CountFingerprint random_fingerprint(Rng& rng, std::span<const FeatureId> vocab,
                            double density) {
  std::vector<CountFingerprint::Entry> entries;
  for (FeatureId id : vocab) {
    if (uniform01(rng) < density) entries.emplace_back(id, draw_count(rng));
  }
  if (entries.empty()) {
    entries.emplace_back(vocab[draw_index(rng, vocab.size())], draw_count(rng));
  }
  return CountFingerprint(std::move(entries));
}

}  // namespace

std::vector<double> anchor_objectives(
    const CountFingerprint& fp, std::span<const CountFingerprint> anchors) {
  std::vector<double> out;
  out.reserve(anchors.size());
  for (const auto& a : anchors) out.push_back(minmax_kernel(fp, a));
  return out;
}

SyntheticDataset generate_synthetic(const SyntheticParams& params) {
  if (params.n < 1) throw std::invalid_argument("synthetic: n must be >= 1");
  if (params.d < 2) throw std::invalid_argument("synthetic: d must be >= 2");
  if (params.n_features < 1) {
    throw std::invalid_argument("synthetic: n_features must be >= 1");
  }
  if (!(params.density > 0.0 && params.density <= 1.0)) {
    throw std::invalid_argument("synthetic: density must lie in (0, 1]");
  }

  Rng rng = make_stream(params.seed, stream::kSynthetic);

  // Opaque hashed feature ids, as a fingerprinting toolkit would emit.
  std::vector<FeatureId> vocab;
  std::unordered_set<FeatureId> used;
  while (vocab.size() < params.n_features) {
    const FeatureId id = rng();
    if (used.insert(id).second) vocab.push_back(id);
  }

  SyntheticDataset out;
  for (std::size_t j = 0; j < params.d; ++j) {
    out.anchors.push_back(random_fingerprint(rng, vocab, params.density));
  }

  std::vector<Molecule> molecules;
  molecules.reserve(params.n);
  for (std::size_t i = 0; i < params.n; ++i) {
    CountFingerprint fp = random_fingerprint(rng, vocab, params.density);
    char id[32];
    std::snprintf(id, sizeof(id), "syn-%06zu", i);
    auto objectives = anchor_objectives(fp, out.anchors);
    Molecule m{id, std::nullopt, std::move(fp), std::move(objectives)};
    molecules.push_back(std::move(m));
  }

  DatasetHeader& h = out.dataset.header;
  h.task = "synthetic-anchor-d" + std::to_string(params.d);
  for (std::size_t j = 0; j < params.d; ++j) {
    h.objective_names.push_back("anchor_" + std::to_string(j + 1));
  }
  h.record_count = params.n;
  h.metadata = {{"generator", "anchor-similarity"},
                {"seed", params.seed},
                {"n", params.n},
                {"d", params.d},
                {"n_features", params.n_features},
                {"density", params.density}};
  out.dataset.pool = CandidatePool(std::move(molecules));
  return out;
}

}  // namespace mobo
