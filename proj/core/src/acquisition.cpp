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


#include "mobo/acquisition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mobo {

std::string_view to_string(AcquisitionKind kind) {
  switch (kind) {
    case AcquisitionKind::kEhvi:
      return "ehvi";
    case AcquisitionKind::kScalarizedEi:
      return "scalarized-ei";
    case AcquisitionKind::kRandom:
      return "random";
  }
  return "unknown";
}

AcquisitionKind parse_acquisition_kind(std::string_view name) {
  if (name == "ehvi") return AcquisitionKind::kEhvi;
  if (name == "scalarized-ei" || name == "scalarized_ei") {
    return AcquisitionKind::kScalarizedEi;
  }
  if (name == "random") return AcquisitionKind::kRandom;
  throw std::invalid_argument("unknown acquisition '" + std::string(name) +
                              "' (expected ehvi, scalarized-ei or random)");
}

void AcquisitionConfig::validate(std::size_t d) const {
  if (ref.size() != d) {
    throw std::invalid_argument("reference point has " +
                                std::to_string(ref.size()) +
                                " entries, expected " + std::to_string(d));
  }
  if (mc_samples < 1) throw std::invalid_argument("mc_samples must be >= 1");
  if (kind == AcquisitionKind::kScalarizedEi) {
    if (weights.size() != d) {
      throw std::invalid_argument("scalarization needs " + std::to_string(d) +
                                  " weights");
    }
    double sum = 0.0;
    for (double w : weights) {
      if (!(w >= 0.0) || !std::isfinite(w)) {
        throw std::invalid_argument("weights must be non-negative");
      }
      sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw std::invalid_argument("weights must sum to 1");
    }
  }
}

std::vector<double> uniform_weights(std::size_t d) {
  return std::vector<double>(d, 1.0 / static_cast<double>(d));
}

NormalDraws::NormalDraws(std::size_t samples, std::size_t dims, Rng& rng)
    : samples_(samples),
      dims_(dims),
      values_(samples * dims),
      column_max_(dims, -std::numeric_limits<double>::infinity()) {
  std::normal_distribution<double> normal(0.0, 1.0);
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t k = 0; k < dims; ++k) {
      const double z = normal(rng);
      values_[s * dims + k] = z;
      column_max_[k] = std::max(column_max_[k], z);
    }
  }
}

EhviScorer::EhviScorer(std::span<const ObjectiveVector> front,
                       std::span<const double> ref, const NormalDraws& draws)
    : hvi_(front, ref),
      draws_(&draws),
      sample_(ref.size()),
      sigma_(ref.size()) {
  if (draws.dims() != ref.size()) {
    throw std::invalid_argument("EHVI draws/reference dimension mismatch");
  }
}

double EhviScorer::operator()(std::span<const double> mean,
                              std::span<const double> variance) {
  const std::size_t d = hvi_.dims();
  if (mean.size() != d || variance.size() != d) {
    throw std::invalid_argument("EHVI belief dimension mismatch");
  }
  bool degenerate = true;
  for (std::size_t k = 0; k < d; ++k) {
    sigma_[k] = std::sqrt(std::max(0.0, variance[k]));
    if (sigma_[k] != 0.0) degenerate = false;
  }
  if (degenerate) return hvi_(mean);

  // Every draw lies below mean + sigma * max(z); if that corner is already
  // covered, so is every sample and the score is exactly zero.
  const auto zmax = draws_->column_max();
  for (std::size_t k = 0; k < d; ++k) {
    sample_[k] = mean[k] + sigma_[k] * zmax[k];
  }
  if (hvi_(sample_) == 0.0) return 0.0;

  double total = 0.0;
  for (std::size_t s = 0; s < draws_->samples(); ++s) {
    const auto z = draws_->row(s);
    for (std::size_t k = 0; k < d; ++k) sample_[k] = mean[k] + sigma_[k] * z[k];
    total += hvi_(sample_);
  }
  return total / static_cast<double>(draws_->samples());
}

double ehvi_mc(const ParetoFront& front, const PosteriorBelief& belief,
               std::span<const double> ref, const NormalDraws& draws) {
  if (!front.empty() && front.dims() != ref.size()) {
    throw std::invalid_argument("EHVI front/reference dimension mismatch");
  }
  const auto pts = front.points();
  EhviScorer scorer(pts, ref, draws);
  return scorer(belief.mean, belief.variance);
}

McEstimate ehvi_mc_estimate(const ParetoFront& front,
                            const PosteriorBelief& belief,
                            std::span<const double> ref,
                            const NormalDraws& draws) {
  const std::size_t d = ref.size();
  if (belief.mean.size() != d || belief.variance.size() != d ||
      draws.dims() != d) {
    throw std::invalid_argument("EHVI dimension mismatch");
  }
  const auto pts = front.points();
  HypervolumeImprovement hvi(pts, ref);
  std::vector<double> sample(d);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t s = 0; s < draws.samples(); ++s) {
    const auto z = draws.row(s);
    for (std::size_t k = 0; k < d; ++k) {
      sample[k] = belief.mean[k] +
                  std::sqrt(std::max(0.0, belief.variance[k])) * z[k];
    }
    const double v = hvi(sample);
    sum += v;
    sum_sq += v * v;
  }
  const double n = static_cast<double>(draws.samples());
  const double mean = sum / n;
  const double var =
      n > 1 ? std::max(0.0, (sum_sq - n * mean * mean) / (n - 1)) : 0.0;
  return {mean, std::sqrt(var / n)};
}

double scalarize_weighted(std::span<const double> values,
                          std::span<const double> weights) {
  if (values.size() != weights.size()) {
    throw std::invalid_argument("scalarization dimension mismatch");
  }
  return std::inner_product(values.begin(), values.end(), weights.begin(),
                            0.0);
}

double normal_pdf(double x) {
  return std::exp(-0.5 * x * x) * (std::numbers::inv_sqrtpi / std::numbers::sqrt2);
}

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double expected_improvement(double mean, double variance, double incumbent) {
  const double sigma = std::sqrt(std::max(0.0, variance));
  const double gap = mean - incumbent;
  if (sigma == 0.0) return std::max(0.0, gap);
  const double u = gap / sigma;
  return std::max(0.0, gap * normal_cdf(u) + sigma * normal_pdf(u));
}

double scalarized_ei_score(const PosteriorBelief& belief,
                           std::span<const double> weights, double incumbent) {
  if (belief.mean.size() != weights.size() ||
      belief.variance.size() != weights.size()) {
    throw std::invalid_argument("scalarized EI dimension mismatch");
  }
  double mean = 0.0;
  double variance = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    mean += weights[k] * belief.mean[k];
    variance += weights[k] * weights[k] * belief.variance[k];
  }
  return expected_improvement(mean, variance, incumbent);
}

double random_score(Rng& rng) { return uniform01(rng); }

}  // namespace mobo
