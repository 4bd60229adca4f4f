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
#include <span>
#include <string_view>
#include <vector>

#include "mobo/hypervolume.hpp"
#include "mobo/pareto.hpp"
#include "mobo/random.hpp"

namespace mobo {

/// Independent Gaussian posterior over the d objectives of one candidate.
struct PosteriorBelief {
  std::vector<double> mean;
  std::vector<double> variance;
};

enum class AcquisitionKind { kEhvi, kScalarizedEi, kRandom };

std::string_view to_string(AcquisitionKind kind);
/// Accepts "ehvi", "scalarized-ei" / "scalarized_ei", "random".
AcquisitionKind parse_acquisition_kind(std::string_view name);

struct AcquisitionConfig {
  AcquisitionKind kind = AcquisitionKind::kEhvi;
  std::vector<double> weights;    ///< scalarized EI only; sums to 1
  std::size_t mc_samples = 1000;  ///< EHVI draws
  /// Share one draw matrix across all candidates of a round. When false,
  /// each candidate gets its own stream keyed by (round, pool index).
  bool common_random_numbers = true;
  ReferencePoint ref;

  /// Throws std::invalid_argument on bad weights, zero samples or a
  /// reference of the wrong dimension.
  void validate(std::size_t d) const;
};

/// Uniform weights 1/d.
std::vector<double> uniform_weights(std::size_t d);

/// Standard-normal draws, row-major samples x dims.
class NormalDraws {
 public:
  NormalDraws(std::size_t samples, std::size_t dims, Rng& rng);

  std::size_t samples() const noexcept { return samples_; }
  std::size_t dims() const noexcept { return dims_; }
  std::span<const double> row(std::size_t s) const {
    return {values_.data() + s * dims_, dims_};
  }
  /// Largest draw per dimension.
  std::span<const double> column_max() const { return column_max_; }

 private:
  std::size_t samples_;
  std::size_t dims_;
  std::vector<double> values_;
  std::vector<double> column_max_;
};

/// Monte-Carlo EHVI: mean over draws z_k of
/// hv_improvement(front, mean + sqrt(variance) * z_k, ref).
double ehvi_mc(const ParetoFront& front, const PosteriorBelief& belief,
               std::span<const double> ref, const NormalDraws& draws);

/// ehvi_mc together with its Monte-Carlo standard error.
McEstimate ehvi_mc_estimate(const ParetoFront& front,
                            const PosteriorBelief& belief,
                            std::span<const double> ref,
                            const NormalDraws& draws);

/// Scores many beliefs against one front with shared draws. Not
/// thread-safe; use one scorer per worker.
class EhviScorer {
 public:
  EhviScorer(std::span<const ObjectiveVector> front,
             std::span<const double> ref, const NormalDraws& draws);

  double operator()(std::span<const double> mean,
                    std::span<const double> variance);

 private:
  HypervolumeImprovement hvi_;
  const NormalDraws* draws_;
  std::vector<double> sample_;
  std::vector<double> sigma_;
};

double scalarize_weighted(std::span<const double> values,
                          std::span<const double> weights);

double normal_pdf(double x);
double normal_cdf(double x);

/// Closed-form EI of a Gaussian N(mean, variance) over `incumbent`.
double expected_improvement(double mean, double variance, double incumbent);

/// EI of the weighted sum: mean sum w_i mu_i, variance sum w_i^2 sigma_i^2.
double scalarized_ei_score(const PosteriorBelief& belief,
                           std::span<const double> weights, double incumbent);

/// Uniform score in [0, 1).
double random_score(Rng& rng);

}  // namespace mobo
