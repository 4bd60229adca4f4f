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


#include "mobo/gp.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace mobo {

void GPHyperparams::validate() const {
  if (!(amplitude > 0.0) || !std::isfinite(amplitude)) {
    throw std::invalid_argument("GP amplitude must be positive");
  }
  if (!(noise_variance > 0.0) || !std::isfinite(noise_variance)) {
    throw std::invalid_argument("GP noise variance must be positive");
  }
  if (!std::isfinite(prior_mean)) {
    throw std::invalid_argument("GP prior mean must be finite");
  }
}

namespace {

bool try_factor(const Eigen::MatrixXd& a, Eigen::MatrixXd& lower) {
  Eigen::LLT<Eigen::MatrixXd> llt(a);
  if (llt.info() != Eigen::Success) return false;
  lower = llt.matrixL();
  const auto diag = lower.diagonal();
  return diag.allFinite() && (diag.array() > 0.0).all();
}

std::shared_ptr<const detail::GramFactor> factorize(
    std::span<const CountFingerprint> inputs, const GPHyperparams& hp,
    KernelKind kernel) {
  auto factor = std::make_shared<detail::GramFactor>();
  factor->inputs.assign(inputs.begin(), inputs.end());

  Eigen::MatrixXd gram = kernel_matrix(inputs, kernel, hp.amplitude);
  gram.diagonal().array() += hp.noise_variance;

  if (try_factor(gram, factor->chol)) return factor;
  for (double jitter : kJitterLadder) {
    Eigen::MatrixXd jittered = gram;
    jittered.diagonal().array() += jitter;
    if (try_factor(jittered, factor->chol)) {
      factor->jitter = jitter;
      return factor;
    }
  }
  return nullptr;
}

}  // namespace

GPModel::GPModel(std::shared_ptr<const detail::GramFactor> factor,
                 Eigen::VectorXd targets, GPHyperparams hyperparams,
                 KernelKind kernel)
    : factor_(std::move(factor)),
      targets_(std::move(targets)),
      hyperparams_(hyperparams),
      kernel_(kernel) {
  if (!factor_ || targets_.size() != factor_->chol.rows()) {
    throw std::invalid_argument("GPModel: targets do not match factor");
  }
  const auto lower = factor_->chol.triangularView<Eigen::Lower>();
  Eigen::VectorXd centered =
      targets_.array() - hyperparams_.prior_mean;
  solve_ = lower.solve(centered);
  lower.transpose().solveInPlace(solve_);
}

MultiObjectiveSurrogate fit(std::span<const CountFingerprint> inputs,
                            const Eigen::MatrixXd& targets,
                            const GPHyperparams& hyperparams,
                            KernelKind kernel) {
  hyperparams.validate();
  if (inputs.empty()) throw std::invalid_argument("fit: no training inputs");
  if (targets.rows() != static_cast<Eigen::Index>(inputs.size())) {
    throw std::invalid_argument("fit: targets rows != number of inputs");
  }
  if (targets.cols() < 1) throw std::invalid_argument("fit: no objectives");
  if (!targets.allFinite()) throw std::invalid_argument("fit: non-finite target");

  // The Gram matrix does not depend on targets, so every objective shares it;
  // a failure is reported against the first objective that needed it.
  auto factor = factorize(inputs, hyperparams, kernel);
  if (!factor) {
    throw CholeskyError(0, "Cholesky factorization failed for objective 0 "
                           "after jitter up to 1e-6");
  }

  MultiObjectiveSurrogate out;
  out.models.reserve(static_cast<std::size_t>(targets.cols()));
  for (Eigen::Index j = 0; j < targets.cols(); ++j) {
    out.models.emplace_back(factor, targets.col(j), hyperparams, kernel);
  }
  return out;
}

Prediction predict(const GPModel& model, const CountFingerprint& query) {
  const auto& hp = model.hyperparams();
  const auto& inputs = model.train_inputs();
  Eigen::VectorXd cross(static_cast<Eigen::Index>(inputs.size()));
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    cross(static_cast<Eigen::Index>(i)) =
        hp.amplitude * kernel_value(model.kernel(), query, inputs[i]);
  }
  const double prior = hp.amplitude * kernel_value(model.kernel(), query, query);

  Prediction p;
  p.mean = hp.prior_mean + cross.dot(model.solve_vector());
  const Eigen::VectorXd v =
      model.chol().triangularView<Eigen::Lower>().solve(cross);
  p.variance = std::clamp(prior - v.squaredNorm(), 0.0, hp.amplitude);
  return p;
}

BatchPrediction predict_batch_cross(const MultiObjectiveSurrogate& surrogate,
                                    const Eigen::MatrixXd& cross,
                                    const Eigen::VectorXd& prior_variance) {
  const auto d = static_cast<Eigen::Index>(surrogate.objectives());
  const Eigen::Index m = cross.rows();
  BatchPrediction out{Eigen::MatrixXd(m, d), Eigen::MatrixXd(m, d)};
  if (m == 0) return out;
  if (cross.cols() != static_cast<Eigen::Index>(surrogate.size()) ||
      prior_variance.size() != m) {
    throw std::invalid_argument("predict_batch_cross: shape mismatch");
  }

  Eigen::VectorXd reduction;
  const GPModel* reduced_for = nullptr;
  for (Eigen::Index j = 0; j < d; ++j) {
    const GPModel& model = surrogate.models[static_cast<std::size_t>(j)];
    out.means.col(j) =
        (cross * model.solve_vector()).array() + model.hyperparams().prior_mean;
    if (reduced_for == nullptr || !model.shares_factor_with(*reduced_for)) {
      const Eigen::MatrixXd v = model.chol()
                                    .triangularView<Eigen::Lower>()
                                    .solve(cross.transpose());
      reduction = v.colwise().squaredNorm().transpose();
      reduced_for = &model;
    }
    const double amp = model.hyperparams().amplitude;
    out.variances.col(j) = (prior_variance - reduction)
                               .array()
                               .max(0.0)
                               .min(amp)
                               .matrix();
  }
  return out;
}

BatchPrediction predict_batch(const MultiObjectiveSurrogate& surrogate,
                              std::span<const CountFingerprint> queries) {
  const auto& hp = surrogate.hyperparams();
  const KernelKind kernel = surrogate.kernel();
  const Eigen::MatrixXd cross = cross_kernel_matrix(
      queries, surrogate.train_inputs(), kernel, hp.amplitude);
  Eigen::VectorXd prior(static_cast<Eigen::Index>(queries.size()));
  for (std::size_t i = 0; i < queries.size(); ++i) {
    prior(static_cast<Eigen::Index>(i)) =
        hp.amplitude * kernel_value(kernel, queries[i], queries[i]);
  }
  return predict_batch_cross(surrogate, cross, prior);
}

MultiObjectiveSurrogate append_observation(
    const MultiObjectiveSurrogate& surrogate, const CountFingerprint& input,
    std::span<const double> values) {
  const auto d = surrogate.objectives();
  if (values.size() != d) {
    throw std::invalid_argument("append_observation: objective count mismatch");
  }
  std::vector<CountFingerprint> inputs = surrogate.train_inputs();
  inputs.push_back(input);
  const auto n = static_cast<Eigen::Index>(inputs.size());
  Eigen::MatrixXd targets(n, static_cast<Eigen::Index>(d));
  for (std::size_t j = 0; j < d; ++j) {
    const auto col = static_cast<Eigen::Index>(j);
    targets.col(col).head(n - 1) = surrogate.models[j].train_targets();
    targets(n - 1, col) = values[j];
  }
  return fit(inputs, targets, surrogate.hyperparams(), surrogate.kernel());
}

}  // namespace mobo
