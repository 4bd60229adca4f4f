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

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace mobo {
namespace {

using testing::dense_solve;
using testing::minmax_reference;
using testing::random_fingerprint;

constexpr GPHyperparams kDefault{};

Eigen::MatrixXd column(std::initializer_list<double> ys) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(ys.size()), 1);
  Eigen::Index i = 0;
  for (double y : ys) m(i++, 0) = y;
  return m;
}

struct RandomProblem {
  std::vector<CountFingerprint> inputs;
  Eigen::MatrixXd targets;
};

RandomProblem random_problem(std::mt19937_64& rng, std::size_t n,
                             std::size_t d) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  RandomProblem p;
  for (std::size_t i = 0; i < n; ++i) {
    p.inputs.push_back(random_fingerprint(rng, 60, 0.2));
  }
  p.targets.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < p.targets.size(); ++i) p.targets(i) = u(rng);
  return p;
}

TEST(GPHyperparams, Validation) {
  EXPECT_NO_THROW(kDefault.validate());
  EXPECT_THROW((GPHyperparams{0.0, 1e-4, 0.0}.validate()), std::invalid_argument);
  EXPECT_THROW((GPHyperparams{1.0, 0.0, 0.0}.validate()), std::invalid_argument);
  EXPECT_THROW((GPHyperparams{1.0, 1e-4, NAN}.validate()), std::invalid_argument);
}

TEST(GPFit, SingletonSolve) {
  const auto s = fit(std::vector<CountFingerprint>{{{1, 1}}}, column({0.5}),
                     kDefault);
  ASSERT_EQ(s.objectives(), 1u);
  EXPECT_DOUBLE_EQ(s.models[0].solve_vector()(0), 0.5 / 1.0001);
  EXPECT_EQ(s.models[0].jitter(), 0.0);
}

TEST(GPFit, IdenticalInputsZeroTargets) {
  const CountFingerprint x{{1, 2}, {3, 1}};
  const auto s = fit(std::vector{x, x}, column({0.0, 0.0}), kDefault);
  EXPECT_EQ(s.models[0].solve_vector(), Eigen::VectorXd::Zero(2));
}

TEST(GPFit, DisjointInputsDiagonalSolve) {
  const auto s = fit(std::vector<CountFingerprint>{{{1, 1}}, {{2, 1}}},
                     column({1.0, 0.0}), kDefault);
  EXPECT_DOUBLE_EQ(s.models[0].solve_vector()(0), 1.0 / 1.0001);
  EXPECT_EQ(s.models[0].solve_vector()(1), 0.0);
}

TEST(GPFit, ObjectivesShareOneFactor) {
  std::mt19937_64 rng(3);
  const auto p = random_problem(rng, 12, 3);
  const auto s = fit(p.inputs, p.targets, kDefault);
  ASSERT_EQ(s.objectives(), 3u);
  EXPECT_TRUE(s.models[1].shares_factor_with(s.models[0]));
  EXPECT_TRUE(s.models[2].shares_factor_with(s.models[0]));
}

TEST(GPFit, RejectsBadShapes) {
  const std::vector<CountFingerprint> xs{{{1, 1}}};
  EXPECT_THROW(fit({}, Eigen::MatrixXd(0, 1), kDefault), std::invalid_argument);
  EXPECT_THROW(fit(xs, column({1.0, 2.0}), kDefault), std::invalid_argument);
  EXPECT_THROW(fit(xs, column({NAN}), kDefault), std::invalid_argument);
}

TEST(GPPredict, PriorRecoveryAwayFromData) {
  const auto s = fit(std::vector<CountFingerprint>{{{1, 1}}, {{2, 3}}},
                     column({0.7, 0.2}), kDefault);
  const auto p = predict(s.models[0], {{99, 4}});
  EXPECT_EQ(p.mean, 0.0);
  EXPECT_EQ(p.variance, 1.0);
}

TEST(GPPredict, SingletonClosedForm) {
  const CountFingerprint x{{5, 2}};
  const auto s = fit(std::vector{x}, column({1.0}), kDefault);
  const auto p = predict(s.models[0], x);
  EXPECT_NEAR(p.mean, 1.0 / 1.0001, 1e-15);
  EXPECT_NEAR(p.variance, 1.0 - 1.0 / 1.0001, 1e-15);
}

TEST(GPPredict, ZeroTargetsGiveZeroMean) {
  std::mt19937_64 rng(4);
  auto p = random_problem(rng, 10, 1);
  p.targets.setZero();
  const auto s = fit(p.inputs, p.targets, kDefault);
  for (int q = 0; q < 20; ++q) {
    EXPECT_EQ(predict(s.models[0], random_fingerprint(rng, 60, 0.2)).mean, 0.0);
  }
}

TEST(GPPredict, ConstantPriorMeanShiftsEverything) {
  GPHyperparams hp;
  hp.prior_mean = 0.3;
  const auto s = fit(std::vector<CountFingerprint>{{{1, 1}}}, column({0.3}), hp);
  EXPECT_EQ(s.models[0].solve_vector()(0), 0.0);
  EXPECT_EQ(predict(s.models[0], {{7, 1}}).mean, 0.3);
}

TEST(GPPredict, MatchesDenseSolveOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng() % 50;
    const auto p = random_problem(rng, n, 1);
    const auto s = fit(p.inputs, p.targets, kDefault);
    ASSERT_EQ(s.models[0].jitter(), 0.0);

    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = minmax_reference(p.inputs[i], p.inputs[j]) + (i == j ? 1e-4 : 0);
      }
      y[i] = p.targets(static_cast<Eigen::Index>(i), 0);
    }
    const auto alpha = dense_solve(a, y);
    for (int q = 0; q < 10; ++q) {
      const auto x = q < 3 ? p.inputs[q % n] : random_fingerprint(rng, 60, 0.2);
      std::vector<double> k(n);
      for (std::size_t i = 0; i < n; ++i) k[i] = minmax_reference(x, p.inputs[i]);
      const auto w = dense_solve(a, k);
      double mean = 0.0, reduce = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        mean += k[i] * alpha[i];
        reduce += k[i] * w[i];
      }
      const auto got = predict(s.models[0], x);
      EXPECT_NEAR(got.mean, mean, 1e-8);
      EXPECT_NEAR(got.variance, std::clamp(1.0 - reduce, 0.0, 1.0), 1e-8);
    }
  }
}

TEST(GPPredict, InterpolatesTrainingTargets) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_problem(rng, 1 + rng() % 50, 2);
    const auto s = fit(p.inputs, p.targets, kDefault);
    for (std::size_t i = 0; i < p.inputs.size(); ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        const double y = p.targets(static_cast<Eigen::Index>(i),
                                   static_cast<Eigen::Index>(j));
        const auto got = predict(s.models[j], p.inputs[i]);
        EXPECT_NEAR(got.mean, y, 1e-2 * (1 + std::abs(y)));
        EXPECT_GE(got.variance, 0.0);
        EXPECT_LE(got.variance, 1.0);
      }
    }
  }
}

TEST(GPPredictBatch, EmptyQueryList) {
  const auto s = fit(std::vector<CountFingerprint>{{{1, 1}}},
                     column({0.5}), kDefault);
  const auto b = predict_batch(s, {});
  EXPECT_EQ(b.means.rows(), 0);
  EXPECT_EQ(b.variances.rows(), 0);
}

TEST(GPPredictBatch, AgreesWithScalarPredict) {
  std::mt19937_64 rng(7);
  const auto p = random_problem(rng, 30, 3);
  const auto s = fit(p.inputs, p.targets, kDefault);
  std::vector<CountFingerprint> queries;
  for (int q = 0; q < 100; ++q) queries.push_back(random_fingerprint(rng, 60, 0.2));
  queries.push_back(p.inputs[0]);
  const auto b = predict_batch(s, queries);
  ASSERT_EQ(b.means.rows(), 101);
  ASSERT_EQ(b.means.cols(), 3);
  for (std::size_t q = 0; q < queries.size(); ++q) {
    for (std::size_t j = 0; j < 3; ++j) {
      const auto one = predict(s.models[j], queries[q]);
      const auto r = static_cast<Eigen::Index>(q);
      const auto c = static_cast<Eigen::Index>(j);
      EXPECT_NEAR(b.means(r, c), one.mean, 1e-12);
      EXPECT_NEAR(b.variances(r, c), one.variance, 1e-12);
    }
  }
}

TEST(GPAppend, EqualsRefitFromScratch) {
  std::mt19937_64 rng(8);
  const auto p = random_problem(rng, 20, 2);
  auto s = fit(std::span(p.inputs).first(1), p.targets.topRows(1), kDefault);
  for (std::size_t i = 1; i < p.inputs.size(); ++i) {
    const std::vector<double> row{p.targets(static_cast<Eigen::Index>(i), 0),
                                  p.targets(static_cast<Eigen::Index>(i), 1)};
    s = append_observation(s, p.inputs[i], row);
  }
  const auto ref = fit(p.inputs, p.targets, kDefault);
  for (int q = 0; q < 30; ++q) {
    const auto x = random_fingerprint(rng, 60, 0.2);
    for (std::size_t j = 0; j < 2; ++j) {
      EXPECT_NEAR(predict(s.models[j], x).mean, predict(ref.models[j], x).mean, 1e-8);
      EXPECT_NEAR(predict(s.models[j], x).variance,
                  predict(ref.models[j], x).variance, 1e-8);
    }
  }
}

TEST(GPAppend, NewPointIsInterpolated) {
  std::mt19937_64 rng(9);
  const auto p = random_problem(rng, 15, 1);
  const auto s = fit(p.inputs, p.targets, kDefault);
  const auto x = random_fingerprint(rng, 60, 0.2);
  const double y = 0.42;
  const auto s2 = append_observation(s, x, std::vector{y});
  EXPECT_LE(std::abs(predict(s2.models[0], x).mean - y), 10 * 1e-4 * (1 + y) + 1e-3);
}

TEST(GPAppend, DuplicateWithSameTargetBarelyMoves) {
  std::mt19937_64 rng(10);
  const auto p = random_problem(rng, 15, 1);
  const auto s = fit(p.inputs, p.targets, kDefault);
  const auto before = predict(s.models[0], p.inputs[3]);
  const auto s2 = append_observation(s, p.inputs[3],
                                     std::vector{p.targets(3, 0)});
  const auto after = predict(s2.models[0], p.inputs[3]);
  EXPECT_LT(std::abs(after.mean - before.mean), 1e-3);
  EXPECT_LT(std::abs(after.variance - before.variance), 1e-3);
}

TEST(GPAppend, ToSingletonEqualsTwoPointFit) {
  const std::vector<CountFingerprint> xs{{{1, 2}, {2, 1}}, {{1, 1}, {3, 3}}};
  const auto s1 = fit(std::span(xs).first(1), column({0.2}), kDefault);
  const auto s2 = append_observation(s1, xs[1], std::vector{0.9});
  const auto ref = fit(xs, column({0.2, 0.9}), kDefault);
  EXPECT_EQ(s2.models[0].solve_vector(), ref.models[0].solve_vector());
  EXPECT_EQ(s2.models[0].chol(), ref.models[0].chol());
}

TEST(GPFit, IsDeterministic) {
  std::mt19937_64 rng(11);
  const auto p = random_problem(rng, 25, 2);
  const auto a = fit(p.inputs, p.targets, kDefault);
  const auto b = fit(p.inputs, p.targets, kDefault);
  EXPECT_EQ(a.models[1].solve_vector(), b.models[1].solve_vector());
}

}  // namespace
}  // namespace mobo
