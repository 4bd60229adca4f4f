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

#include "mobo/run_io.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "mobo/synthetic.hpp"
#include "test_support.hpp"

namespace mobo {
namespace {

using testing::TempDir;

TEST(FormatDouble, ShortestRoundTrip) {
  for (double x : {0.0, 0.1, 1.0 / 3.0, 1e-300, 123456.789, -2.5}) {
    EXPECT_EQ(std::stod(format_double(x)), x);
  }
  EXPECT_EQ(format_double(0.5), "0.5");
}

TEST(RoundLog, EmptyIsHeaderOnly) {
  TempDir dir("roundlog-empty");
  write_round_log({}, 3, dir / "log.csv");
  EXPECT_EQ(testing::slurp(dir / "log.csv"),
            "round,selected_id,acq_score,obj_1,obj_2,obj_3,hv,r2,wall_ms\n");
  const auto back = read_round_log(dir / "log.csv");
  EXPECT_EQ(back.dims, 3u);
  EXPECT_TRUE(back.records.empty());
}

TEST(RoundLog, WriteThenReadIsExact) {
  TempDir dir("roundlog");
  const std::vector<RunRecord> records{
      {1, "syn-000001", 0.125, {0.1, 1.0 / 3.0}, 0.2, 0.4, 0.0},
      {2, "has,comma \"quoted\"", 1e-17, {0.0, 1.0}, 0.25, 0.3, 12.5},
  };
  write_round_log(records, 2, dir / "log.csv");
  const auto back = read_round_log(dir / "log.csv");
  EXPECT_EQ(back.dims, 2u);
  EXPECT_EQ(back.records, records);
  EXPECT_THROW(write_round_log(records, 3, dir / "bad.csv"), std::invalid_argument);
}

TEST(RoundLog, ReadErrorsCarryPath) {
  TempDir dir("roundlog-bad");
  EXPECT_THROW(read_round_log(dir / "missing.csv"), std::runtime_error);
  {
    std::ofstream(dir / "junk.csv") << "a,b\n";
  }
  try {
    read_round_log(dir / "junk.csv");
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("junk.csv"), std::string::npos);
  }
}

TEST(InitialArchive, RoundTrip) {
  SyntheticParams p;
  p.n = 30;
  const auto pool = generate_synthetic(p).dataset.pool;
  Archive a(pool.size());
  for (std::size_t i : {4u, 9u, 2u, 17u}) a.add(i);
  TempDir dir("archive");
  write_initial_archive(pool, a, 3, dir / "init.csv");
  const auto back = read_initial_archive(dir / "init.csv");
  ASSERT_EQ(back.ids.size(), 3u);
  EXPECT_EQ(back.ids[2], pool[2].id);
  EXPECT_EQ(back.objectives[0], pool[4].objectives);
}

TEST(RunConfigJson, RoundTrip) {
  RunConfig c = resolve_defaults(RunConfig{}, 3);
  c.acquisition.kind = AcquisitionKind::kScalarizedEi;
  c.acquisition.weights = {0.2, 0.3, 0.5};
  c.acquisition.mc_samples = 77;
  c.acquisition.common_random_numbers = false;
  c.rounds = 9;
  c.init_size = 4;
  c.master_seed = 1ULL << 40;
  c.gp.noise_variance = 1e-3;
  c.gp.prior_mean = 0.1;
  c.kernel = KernelKind::kTanimoto;
  c.direction_granularity = 6;
  c.circle_thresholds = {0.6, 0.7};
  c.circle_distance = DistanceKind::kBinaryTanimoto;
  c.threads = 3;
  const RunConfig back = run_config_from_json(to_json(c));
  EXPECT_EQ(to_json(back), to_json(c));
  EXPECT_EQ(back.master_seed, c.master_seed);
  EXPECT_EQ(back.acquisition.weights, c.acquisition.weights);
  EXPECT_EQ(back.kernel, KernelKind::kTanimoto);
  EXPECT_THROW(run_config_from_json(nlohmann::json::array()), std::invalid_argument);
}

TEST(RunResultJson, CarriesFrontAndCircles) {
  SyntheticParams p;
  p.n = 40;
  const auto pool = generate_synthetic(p).dataset.pool;
  RunConfig c = resolve_defaults(RunConfig{}, 3);
  c.rounds = 3;
  c.acquisition.kind = AcquisitionKind::kRandom;
  const auto result = run(pool, c);
  const auto j = run_result_json(result, pool);
  EXPECT_EQ(j.at("final_hv").get<double>(), result.final_hv());
  EXPECT_EQ(j.at("pareto_front_ids").size(), result.front.size());
  EXPECT_EQ(j.at("circles").size(), c.circle_thresholds.size());
}

}  // namespace
}  // namespace mobo
