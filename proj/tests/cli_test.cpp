/*
 * Copyright 2026 The prefeval Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "prefeval/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "prefeval/data_io.hpp"
#include "prefeval/error.hpp"

namespace prefeval::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "prefeval");
  std::ostringstream out;
  std::ostringstream err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("prefeval_cli_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }

  void Write(const std::string& name, const std::string& text) const {
    WriteFileAtomic(dir_ / name, text);
  }

  fs::path dir_;
};

TEST(ParseCutoffListTest, RangesAndLists) {
  auto values = [](const std::vector<Cutoff>& cs) {
    std::vector<int> out;
    for (auto c : cs) out.push_back(c.value());
    return out;
  };
  EXPECT_EQ(values(ParseCutoffList("1-10")),
            (std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
  EXPECT_EQ(values(ParseCutoffList("5,1,3")), (std::vector<int>{1, 3, 5}));
  EXPECT_EQ(values(ParseCutoffList("1-3,2,8")), (std::vector<int>{1, 2, 3, 8}));
  EXPECT_THROW(ParseCutoffList("0-3"), Error);
  EXPECT_THROW(ParseCutoffList("4-2"), Error);
  EXPECT_THROW(ParseCutoffList("1,,2"), Error);
  EXPECT_THROW(ParseCutoffList("a"), Error);
}

TEST(ParseMetricListTest, NamesAndDuplicates) {
  const auto kinds = ParseMetricList("precision,ap,ndcg,ap", 10.0);
  ASSERT_EQ(kinds.size(), 3u);
  EXPECT_EQ(kinds[2], MetricKind::Ndcg(10.0));
  EXPECT_THROW(ParseMetricList("precision,rbp", 2.0), Error);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Invoke({}).code, kExitUsage);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitUsage);
  const auto missing_prefs =
      Invoke({"pir", "--judgments", "j.tsv", "--runs", "r.tsv"});
  EXPECT_EQ(missing_prefs.code, kExitUsage);
  EXPECT_NE(missing_prefs.err.find("--prefs"), std::string::npos);
  EXPECT_EQ(Invoke({"sweep", "--judgments", "j", "--runs", "r", "--prefs",
                    "p", "--cutoffs", "0"})
                .code,
            kExitUsage);
  EXPECT_EQ(Invoke({"simulate", "--out", Path("x"), "--queries", "0"}).code,
            kExitUsage);
  EXPECT_EQ(Invoke({"--help"}).code, kExitOk);
}

TEST_F(CliTest, DataErrorsNameFileAndLine) {
  Write("j.tsv", "q1\td1\t2\nq1\td2\t9\n");
  Write("r.tsv", "q1\tA\t1\td1\nq1\tB\t1\td2\n");
  Write("p.tsv", "q1\tFIRST\n");
  const auto res = Invoke({"pir", "--judgments", Path("j.tsv"), "--runs",
                           Path("r.tsv"), "--prefs", Path("p.tsv")});
  EXPECT_EQ(res.code, kExitData);
  EXPECT_NE(res.err.find(Path("j.tsv") + ":2"), std::string::npos) << res.err;
  EXPECT_NE(res.err.find("OutOfScale"), std::string::npos) << res.err;

  const auto missing = Invoke({"pir", "--judgments", Path("nope.tsv"),
                               "--runs", Path("r.tsv"), "--prefs",
                               Path("p.tsv")});
  EXPECT_EQ(missing.code, kExitData);
}

TEST_F(CliTest, PirAndMetricsOnSmallStudy) {
  Write("j.tsv", "q1\ta\t1\nq1\tb\t6\nq2\ta\t3\nq2\tb\t2\n");
  Write("r.tsv",
        "q1\tA\t1\ta\nq1\tA\t2\tb\nq1\tB\t1\tb\nq1\tB\t2\ta\n"
        "q2\tA\t1\ta\nq2\tA\t2\tb\nq2\tB\t1\tb\nq2\tB\t2\ta\n");
  Write("p.tsv", "q1\tFIRST\nq2\tFIRST\n");
  const auto pir =
      Invoke({"pir", "--judgments", Path("j.tsv"), "--runs", Path("r.tsv"),
              "--prefs", Path("p.tsv"), "--metric", "precision", "--cutoff",
              "1"});
  ASSERT_EQ(pir.code, kExitOk) << pir.err;
  // Deltas: q1 = 1.0 - 0.0 (agrees), q2 = 0.6 - 0.8 (inverted).
  EXPECT_EQ(pir.out,
            "metric,cutoff,threshold,pir,preferences,ties,dropped\n"
            "precision,1,0.000000,0.000000,2,0,0\n");

  const auto metrics =
      Invoke({"metrics", "--judgments", Path("j.tsv"), "--runs",
              Path("r.tsv"), "--metrics", "precision", "--cutoffs", "1"});
  ASSERT_EQ(metrics.code, kExitOk) << metrics.err;
  EXPECT_EQ(metrics.out,
            "query,list,metric,cutoff,value\n"
            "q1,A,precision,1,1.000000\n"
            "q1,B,precision,1,0.000000\n"
            "q2,A,precision,1,0.600000\n"
            "q2,B,precision,1,0.800000\n"
            "all,A,precision,1,0.800000\n"
            "all,B,precision,1,0.400000\n");
}

TEST_F(CliTest, SimulateThenSweepJson) {
  const auto sim = Invoke({"simulate", "--seed", "3", "--queries", "30",
                           "--docs", "20", "--utility", "ndcg", "--depth", "3",
                           "--out", Path("study")});
  ASSERT_EQ(sim.code, kExitOk) << sim.err;
  for (const char* f : {"judgments.tsv", "runs.tsv", "prefs.tsv"}) {
    EXPECT_TRUE(fs::exists(dir_ / "study" / f)) << f;
  }
  const auto sweep = Invoke(
      {"sweep", "--judgments", Path("study/judgments.tsv"), "--runs",
       Path("study/runs.tsv"), "--prefs", Path("study/prefs.tsv"),
       "--metrics", "ndcg,cg", "--cutoffs", "3", "--out", Path("r.json")});
  ASSERT_EQ(sweep.code, kExitOk) << sweep.err;
  const auto doc = nlohmann::json::parse(ReadFile(Path("r.json")));
  EXPECT_EQ(doc["meta"]["cutoffs"], "3");
  ASSERT_EQ(doc["best"].size(), 2u);
  EXPECT_EQ(doc["best"][1]["metric"], "ndcg");
  EXPECT_EQ(doc["best"][1]["pir"], 1.0);
  EXPECT_EQ(doc["best"][1]["threshold"], 0.0);
  EXPECT_NE(sweep.out.find("ndcg\t3\t0.000000\t1.000000"), std::string::npos)
      << sweep.out;
}

}  // namespace
}  // namespace prefeval::cli
