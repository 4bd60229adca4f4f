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
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mobo/fingerprint.hpp"

namespace mobo {

/// Fixed GP hyperparameters. No marginal-likelihood fitting is performed.
struct GPHyperparams {
  double amplitude = 1.0;        ///< kernel output scale
  double noise_variance = 1e-4;  ///< observation noise added to the diagonal
  double prior_mean = 0.0;       ///< constant prior mean

  /// Throws std::invalid_argument unless amplitude and noise are positive.
  void validate() const;
};

/// Raised when K + s*I cannot be factorized even after jitter escalation.
class CholeskyError : public std::runtime_error {
 public:
  CholeskyError(std::size_t objective, const std::string& what)
      : std::runtime_error(what), objective_(objective) {}
  std::size_t objective() const noexcept { return objective_; }

 private:
  std::size_t objective_;
};

/// Jitter values tried, in order, after a plain factorization fails.
inline constexpr double kJitterLadder[] = {1e-10, 1e-8, 1e-6};

namespace detail {
struct GramFactor {
  std::vector<CountFingerprint> inputs;
  Eigen::MatrixXd chol;  // lower triangle of K + (s + jitter) I
  double jitter = 0.0;
};
}  // namespace detail

struct Prediction {
  double mean = 0.0;
  double variance = 0.0;
};

/// Exact GP posterior for one objective. Immutable once built; the Gram
/// factorization is shared between models trained on the same inputs.
class GPModel {
 public:
  GPModel(std::shared_ptr<const detail::GramFactor> factor,
          Eigen::VectorXd targets, GPHyperparams hyperparams,
          KernelKind kernel);

  const std::vector<CountFingerprint>& train_inputs() const {
    return factor_->inputs;
  }
  const Eigen::VectorXd& train_targets() const { return targets_; }
  /// Lower Cholesky factor of K_n + (s + jitter) I.
  const Eigen::MatrixXd& chol() const { return factor_->chol; }
  /// (K_n + s I)^{-1} (y - prior_mean).
  const Eigen::VectorXd& solve_vector() const { return solve_; }
  double jitter() const { return factor_->jitter; }
  const GPHyperparams& hyperparams() const { return hyperparams_; }
  KernelKind kernel() const { return kernel_; }
  std::size_t size() const { return factor_->inputs.size(); }

  bool shares_factor_with(const GPModel& other) const {
    return factor_ == other.factor_;
  }

 private:
  std::shared_ptr<const detail::GramFactor> factor_;
  Eigen::VectorXd targets_;
  Eigen::VectorXd solve_;
  GPHyperparams hyperparams_;
  KernelKind kernel_;
};

/// One independent GP per objective, all on the same inputs.
struct MultiObjectiveSurrogate {
  std::vector<GPModel> models;

  std::size_t objectives() const { return models.size(); }
  std::size_t size() const { return models.empty() ? 0 : models[0].size(); }
  const std::vector<CountFingerprint>& train_inputs() const {
    return models.at(0).train_inputs();
  }
  const GPHyperparams& hyperparams() const {
    return models.at(0).hyperparams();
  }
  KernelKind kernel() const { return models.at(0).kernel(); }
};

struct BatchPrediction {
  Eigen::MatrixXd means;      ///< m x d
  Eigen::MatrixXd variances;  ///< m x d
};

/// Fits d independent GPs. targets is n x d. Throws CholeskyError naming the
/// objective when factorization fails past the jitter ladder.
MultiObjectiveSurrogate fit(std::span<const CountFingerprint> inputs,
                            const Eigen::MatrixXd& targets,
                            const GPHyperparams& hyperparams,
                            KernelKind kernel = KernelKind::kMinMax);

/// Posterior mean and variance; variance clamped to [0, amplitude].
Prediction predict(const GPModel& model, const CountFingerprint& query);

BatchPrediction predict_batch(const MultiObjectiveSurrogate& surrogate,
                              std::span<const CountFingerprint> queries);

/// Batched prediction from a precomputed cross-kernel block (m x n, already
/// scaled by amplitude) and the prior variance of each query.
BatchPrediction predict_batch_cross(const MultiObjectiveSurrogate& surrogate,
                                    const Eigen::MatrixXd& cross,
                                    const Eigen::VectorXd& prior_variance);

/// Refits on the training set extended by one observation. The input
/// surrogate is left untouched.
MultiObjectiveSurrogate append_observation(
    const MultiObjectiveSurrogate& surrogate, const CountFingerprint& input,
    std::span<const double> values);

}  // namespace mobo
