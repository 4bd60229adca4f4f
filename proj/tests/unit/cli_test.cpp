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

#include "cli.hpp"

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "mobo/dataset.hpp"
#include "mobo/run_io.hpp"
#include "test_support.hpp"

namespace mobo {
namespace {

namespace fs = std::filesystem;
using testing::slurp;
using testing::TempDir;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "mobo");
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = new TempDir("cli");
    const auto r = cli({"synth", "--seed", "1", "--n", "120", "--d", "3", "--out",
                        dataset()});
    ASSERT_EQ(r.code, 0) << r.err;
  }
  static void TearDownTestSuite() {
    delete dir_;
    dir_ = nullptr;
  }
  static std::string dataset() { return (*dir_ / "syn.jsonl").string(); }
  static std::string path(const std::string& leaf) { return (*dir_ / leaf).string(); }

  static TempDir* dir_;
};
TempDir* CliTest::dir_ = nullptr;

TEST_F(CliTest, SynthThenValidate) {
  const auto r = cli({"validate", dataset()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("ok"), std::string::npos);
  EXPECT_EQ(load_dataset(dataset()).pool.size(), 120u);
}

TEST_F(CliTest, ValidateReportsBadFile) {
  {
    std::ofstream(path("bad.jsonl")) << "{\"format\":\"nope\"}\n";
  }
  const auto r = cli({"validate", path("bad.jsonl")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 1"), std::string::npos);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"run", "--dataset", dataset(), "--out", path("x"),
                 "--rounds", "many"}).code, 2);
  EXPECT_EQ(cli({"run", "--dataset", dataset(), "--out", path("x"),
                 "--acquisition", "ucb"}).code, 2);
  EXPECT_EQ(cli({"run", "--dataset", dataset(), "--out", path("x"),
                 "--rounds", "500"}).code, 2);
}

TEST_F(CliTest, HelpExitsZero) {
  const auto r = cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("suite"), std::string::npos);
}

TEST_F(CliTest, MissingDatasetIsRuntimeFailure) {
  const auto r = cli({"run", "--dataset", path("nope.jsonl"), "--out", path("y")});
  EXPECT_EQ(r.code, 1);
}

TEST_F(CliTest, RunTwiceIsByteIdentical) {
  const std::vector<std::string> flags{"--dataset", dataset(), "--acquisition", "ehvi",
                                       "--seed", "4", "--rounds", "6",
                                       "--mc-samples", "64"};
  auto a = flags, b = flags;
  a.insert(a.begin(), "run");
  b.insert(b.begin(), "run");
  a.insert(a.end(), {"--out", path("run-a")});
  b.insert(b.end(), {"--out", path("run-b"), "--threads", "3"});
  ASSERT_EQ(cli(a).code, 0);
  ASSERT_EQ(cli(b).code, 0);
  const std::string log = slurp(path("run-a") + "/round_log.csv");
  EXPECT_EQ(log, slurp(path("run-b") + "/round_log.csv"));
  EXPECT_EQ(read_round_log(path("run-a") + "/round_log.csv").records.size(), 6u);
  for (const char* f : {"config.json", "initial_archive.csv", "result.json"}) {
    EXPECT_TRUE(fs::exists(path("run-a") + "/" + f)) << f;
  }
}

TEST_F(CliTest, ConfigReplayReproducesRun) {
  ASSERT_EQ(cli({"run", "--dataset", dataset(), "--acquisition", "scalarized-ei",
                 "--seed", "2", "--rounds", "5", "--weights", "0.5,0.25,0.25",
                 "--out", path("orig")}).code, 0);
  const auto r = cli({"run", "--config", path("orig") + "/config.json", "--out",
                      path("replay")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(path("orig") + "/round_log.csv"),
            slurp(path("replay") + "/round_log.csv"));
  const auto cfg = nlohmann::json::parse(slurp(path("replay") + "/config.json"));
  EXPECT_EQ(cfg.dump().find("0.25") != std::string::npos, true);
}

TEST_F(CliTest, SuiteThenReportAgree) {
  const auto r = cli({"suite", "--dataset", dataset(), "--acquisitions",
                      "ehvi,random", "--seeds", "1,2", "--rounds", "4",
                      "--mc-samples", "32", "--out", path("suite")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("Final hypervolume"), std::string::npos);
  ASSERT_TRUE(fs::exists(path("suite") + "/summary.json"));
  const auto suite_summary =
      nlohmann::json::parse(slurp(path("suite") + "/summary.json"));

  const auto rep = cli({"report", "--runs", path("suite") + "/ehvi/seed-1",
                        path("suite") + "/ehvi/seed-2",
                        path("suite") + "/random/seed-1",
                        path("suite") + "/random/seed-2", "--out",
                        path("report")});
  ASSERT_EQ(rep.code, 0) << rep.err;
  const auto report = nlohmann::json::parse(slurp(path("report") + ".json"));
  EXPECT_EQ(report["methods"], suite_summary["methods"]);
}

TEST_F(CliTest, ReportDetectsTamperedLog) {
  ASSERT_EQ(cli({"run", "--dataset", dataset(), "--acquisition", "random",
                 "--rounds", "3", "--out", path("tamper")}).code, 0);
  const std::string log_path = path("tamper") + "/round_log.csv";
  auto log = read_round_log(log_path);
  log.records.back().hv += 0.5;
  write_round_log(log.records, log.dims, log_path);
  const auto r = cli({"report", "--runs", path("tamper"), "--out", path("t")});
  EXPECT_EQ(r.code, 1);
}

}  // namespace
}  // namespace mobo
