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

#include "mobo/pareto.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace mobo {
namespace {

using V = std::vector<double>;

TEST(Dominance, Examples) {
  EXPECT_TRUE(dominates(V{0.5, 0.5}, V{0.4, 0.5}));
  EXPECT_FALSE(dominates(V{0.5, 0.5}, V{0.5, 0.5}));
  EXPECT_TRUE(weakly_dominates(V{0.5, 0.5}, V{0.5, 0.5}));
  EXPECT_FALSE(dominates(V{0.9, 0.1}, V{0.1, 0.9}));
  EXPECT_FALSE(dominates(V{0.1, 0.9}, V{0.9, 0.1}));
  EXPECT_THROW(dominates(V{1.0}, V{1.0, 0.0}), std::invalid_argument);
}

TEST(Dominance, IsAStrictPartialOrder) {
  std::mt19937_64 rng(21);
  const auto pts = testing::random_points(rng, 40, 3, 3);
  for (const auto& a : pts) {
    EXPECT_FALSE(dominates(a.values, a.values));
    for (const auto& b : pts) {
      if (dominates(a.values, b.values)) {
        EXPECT_FALSE(dominates(b.values, a.values));
        for (const auto& c : pts) {
          if (dominates(b.values, c.values)) {
            EXPECT_TRUE(dominates(a.values, c.values));
          }
        }
      }
    }
  }
}

TEST(NonDominatedFilter, EmptyAndIncomparable) {
  EXPECT_TRUE(non_dominated_filter({}).empty());
  const std::vector<FrontEntry> pts{{0, {1, 0}}, {1, {0, 1}}, {2, {0.5, 0.5}}};
  const auto f = non_dominated_filter(pts);
  EXPECT_EQ(f.ids(), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(f.dims(), 2u);
}

TEST(NonDominatedFilter, DropsDominatedKeepsDuplicates) {
  const std::vector<FrontEntry> pts{
      {4, {0.2, 0.2}}, {7, {0.5, 0.5}}, {9, {0.5, 0.5}}, {1, {0.5, 0.4}}};
  EXPECT_EQ(non_dominated_filter(pts).ids(), (std::vector<std::size_t>{7, 9}));
}

TEST(NonDominatedFilter, RejectsBadInput) {
  EXPECT_THROW(non_dominated_filter(std::vector<FrontEntry>{{0, {1}}, {0, {2}}}),
               std::invalid_argument);
  EXPECT_THROW(non_dominated_filter(std::vector<FrontEntry>{{0, {1}}, {1, {2, 3}}}),
               std::invalid_argument);
}

TEST(NonDominatedFilter, MatchesBruteForce) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 1 + rng() % 4;
    const std::size_t n = rng() % 61;
    const int levels = (t % 2 == 0) ? 4 : 0;
    const auto pts = testing::random_points(rng, n, d, levels);
    EXPECT_EQ(non_dominated_filter(pts).ids(), testing::brute_force_front(pts));
  }
}

TEST(NonDominatedFilter, OutputIsMutuallyNonDominatedAndCoversInput) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 50; ++t) {
    auto pts = testing::random_points(rng, 50, 3, 5);
    const auto front = non_dominated_filter(pts);
    for (const auto& a : front.entries()) {
      for (const auto& b : front.entries()) {
        EXPECT_FALSE(dominates(a.values, b.values));
      }
    }
    for (const auto& p : pts) {
      const bool covered = std::any_of(
          front.entries().begin(), front.entries().end(),
          [&](const FrontEntry& f) { return weakly_dominates(f.values, p.values); });
      EXPECT_TRUE(covered);
    }
    std::shuffle(pts.begin(), pts.end(), rng);
    auto ids = non_dominated_filter(pts).ids();
    auto expected = front.ids();
    std::sort(ids.begin(), ids.end());
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(ids, expected);
  }
}

}  // namespace
}  // namespace mobo
