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

#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace mobo {
namespace {

using testing::minmax_reference;
using testing::random_fingerprint;

TEST(CountFingerprint, RejectsZeroCountsAndRepeatedIds) {
  EXPECT_THROW(CountFingerprint({{1, 0}}), std::invalid_argument);
  EXPECT_THROW(CountFingerprint({{1, 2}, {1, 3}}), std::invalid_argument);
}

TEST(CountFingerprint, SortsEntriesAndTracksNorms) {
  CountFingerprint fp({{9, 1}, {7, 2}});
  ASSERT_EQ(fp.size(), 2u);
  EXPECT_EQ(fp.features()[0].first, 7u);
  EXPECT_EQ(fp.count(9), 1u);
  EXPECT_EQ(fp.count(8), 0u);
  EXPECT_EQ(fp.total(), 3u);
  EXPECT_DOUBLE_EQ(fp.squared_norm(), 5.0);
  EXPECT_EQ(fp.binarized(), CountFingerprint({{7, 1}, {9, 1}}));
}

TEST(MinMaxKernel, HandExamples) {
  EXPECT_EQ(minmax_kernel({{7, 2}, {9, 1}}, {{7, 2}, {9, 1}}), 1.0);
  EXPECT_EQ(minmax_kernel({{1, 2}}, {{2, 3}}), 0.0);
  EXPECT_DOUBLE_EQ(minmax_kernel({{1, 2}, {2, 1}}, {{1, 1}, {3, 3}}), 1.0 / 6.0);
}

TEST(MinMaxKernel, BothEmptyIsOne) {
  EXPECT_EQ(minmax_kernel({}, {}), 1.0);
  EXPECT_EQ(tanimoto_kernel({}, {}), 1.0);
  EXPECT_EQ(minmax_kernel({}, {{1, 1}}), 0.0);
}

TEST(TanimotoKernel, HandExamples) {
  EXPECT_EQ(tanimoto_kernel({{1, 1}, {2, 1}}, {{1, 1}, {2, 1}}), 1.0);
  EXPECT_DOUBLE_EQ(tanimoto_kernel({{1, 1}, {2, 1}}, {{1, 1}, {3, 1}}),
                   1.0 / 3.0);
  EXPECT_DOUBLE_EQ(tanimoto_kernel({{1, 2}}, {{1, 1}}), 2.0 / 3.0);
}

TEST(TanimotoDistance, HandExamples) {
  const CountFingerprint a{{1, 2}, {2, 1}};
  EXPECT_EQ(tanimoto_distance(a, a), 0.0);
  EXPECT_EQ(tanimoto_distance({{1, 2}}, {{2, 3}}), 1.0);
  EXPECT_DOUBLE_EQ(tanimoto_distance(a, {{1, 1}, {3, 3}}), 5.0 / 6.0);
}

TEST(KernelNames, RoundTrip) {
  for (auto k : {KernelKind::kMinMax, KernelKind::kTanimoto}) {
    EXPECT_EQ(parse_kernel_kind(to_string(k)), k);
  }
  for (auto k : {DistanceKind::kMinMax, DistanceKind::kBinaryTanimoto}) {
    EXPECT_EQ(parse_distance_kind(to_string(k)), k);
  }
  EXPECT_THROW(parse_kernel_kind("rbf"), std::invalid_argument);
}

TEST(KernelProperties, MatchBruteForceAndStayInRange) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const auto a = random_fingerprint(rng, 40, 0.2);
    const auto b = random_fingerprint(rng, 40, 0.2);
    const double k = minmax_kernel(a, b);
    EXPECT_NEAR(k, minmax_reference(a, b), 1e-15);
    EXPECT_EQ(k, minmax_kernel(b, a));
    EXPECT_GE(k, 0.0);
    EXPECT_LE(k, 1.0);
    EXPECT_EQ(minmax_kernel(a, a), 1.0);
    const double tk = tanimoto_kernel(a, b);
    EXPECT_GE(tk, 0.0);
    EXPECT_LE(tk, 1.0 + 1e-15);
    EXPECT_EQ(tk, tanimoto_kernel(b, a));
    EXPECT_NEAR(distance_value(DistanceKind::kMinMax, a, b), 1.0 - k, 1e-15);
  }
}

TEST(KernelProperties, CountAndBinaryFormsAgreeOnBinaryInputs) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_fingerprint(rng, 30, 0.3, 1);
    const auto b = random_fingerprint(rng, 30, 0.3, 1);
    EXPECT_NEAR(minmax_kernel(a, b), tanimoto_kernel(a, b), 1e-15);
  }
  const auto a = random_fingerprint(rng, 30, 0.3);
  const auto b = random_fingerprint(rng, 30, 0.3);
  EXPECT_EQ(distance_value(DistanceKind::kBinaryTanimoto, a, b),
            1.0 - minmax_kernel(a.binarized(), b.binarized()));
}

TEST(KernelMatrix, SmallCases) {
  const CountFingerprint a{{1, 1}}, b{{2, 1}};
  Eigen::MatrixXd k1 = kernel_matrix(std::vector{a}, KernelKind::kMinMax, 2.5);
  ASSERT_EQ(k1.rows(), 1);
  EXPECT_EQ(k1(0, 0), 2.5);
  EXPECT_EQ(kernel_matrix(std::vector{a, a}, KernelKind::kMinMax, 1.0),
            Eigen::MatrixXd::Ones(2, 2));
  EXPECT_EQ(kernel_matrix(std::vector{a, b}, KernelKind::kMinMax, 1.0),
            Eigen::MatrixXd::Identity(2, 2));
  EXPECT_THROW(kernel_matrix(std::vector<CountFingerprint>{},
                             KernelKind::kMinMax, 1.0),
               std::invalid_argument);
}

TEST(KernelMatrix, SymmetricPsdAndConsistentWithCross) {
  std::mt19937_64 rng(13);
  std::vector<CountFingerprint> pts;
  for (int i = 0; i < 40; ++i) pts.push_back(random_fingerprint(rng, 25, 0.25));
  for (auto kind : {KernelKind::kMinMax, KernelKind::kTanimoto}) {
    const Eigen::MatrixXd k = kernel_matrix(pts, kind, 1.0);
    EXPECT_EQ(k, k.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k);
    EXPECT_GT(es.eigenvalues().minCoeff(), -1e-10);
    EXPECT_EQ(cross_kernel_matrix(pts, pts, kind, 1.0), k);
  }
}

}  // namespace
}  // namespace mobo
