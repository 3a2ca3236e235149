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

#include "prefeval/data_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>

#include "json.hpp"
#include "prefeval/error.hpp"
#include "prefeval/study_sim.hpp"

namespace prefeval {
namespace {

// Runs `fn` and checks the error code and reported line.
void ExpectError(ErrorCode code, std::size_t line, auto&& fn) {
  try {
    fn();
    FAIL() << "expected " << ErrorCodeName(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
    EXPECT_EQ(e.line(), line) << e.what();
  }
}

JudgmentSet Judgments(const std::string& text, GradeScale scale) {
  std::istringstream in(text);
  return ParseJudgments(in, scale);
}

std::vector<RankedList> Runs(const std::string& text) {
  std::istringstream in(text);
  return ParseRuns(in);
}

PreferenceMap Prefs(const std::string& text) {
  std::istringstream in(text);
  return ParsePreferences(in);
}

TEST(SchoolGradeTest, ConversionTable) {
  const double expected[] = {1.0, 0.8, 0.6, 0.4, 0.2, 0.0};
  for (int g = 1; g <= 6; ++g) {
    EXPECT_EQ(ConvertSchoolGrade(g).value(), expected[g - 1]);
    EXPECT_EQ(ToSchoolGrade(ConvertSchoolGrade(g)), g);
    if (g > 1) {
      EXPECT_LT(ConvertSchoolGrade(g).value(),
                ConvertSchoolGrade(g - 1).value());
    }
  }
  ExpectError(ErrorCode::kOutOfScale, 0, [] { ConvertSchoolGrade(0); });
  ExpectError(ErrorCode::kOutOfScale, 0, [] { ConvertSchoolGrade(7); });
  ExpectError(ErrorCode::kOutOfScale, 0,
              [] { ToSchoolGrade(RelevanceGrade(0.5)); });
}

TEST(ParseJudgmentsTest, Examples) {
  const auto js = Judgments("# header\n\nq1\td7\t2\nq1\td8\t6\n",
                            GradeScale::kSchool6);
  EXPECT_EQ(js.size(), 2u);
  EXPECT_EQ(js.Grade("q1", "d7"), 0.8);
  EXPECT_EQ(js.Grade("q1", "d8"), 0.0);
  const auto unit = Judgments("q 1\tdoc a\t0.35\n", GradeScale::kUnit);
  EXPECT_EQ(unit.Grade("q 1", "doc a"), 0.35);
  EXPECT_TRUE(Judgments("# only a comment\n", GradeScale::kUnit).empty());
}

TEST(ParseJudgmentsTest, Errors) {
  ExpectError(ErrorCode::kOutOfScale, 2, [] {
    Judgments("q1\td1\t1\nq1\td7\t7\n", GradeScale::kSchool6);
  });
  ExpectError(ErrorCode::kOutOfScale, 1,
              [] { Judgments("q1\td7\t2.5\n", GradeScale::kSchool6); });
  ExpectError(ErrorCode::kOutOfScale, 1,
              [] { Judgments("q1\td7\t1.2\n", GradeScale::kUnit); });
  ExpectError(ErrorCode::kParseError, 1,
              [] { Judgments("q1\td7\tgood\n", GradeScale::kSchool6); });
  ExpectError(ErrorCode::kParseError, 3, [] {
    Judgments("q1\td7\t2\n#\nq1 d8 2\n", GradeScale::kSchool6);
  });
  ExpectError(ErrorCode::kParseError, 1,
              [] { Judgments("q1\t\t2\n", GradeScale::kSchool6); });
  ExpectError(ErrorCode::kDuplicateJudgment, 2, [] {
    Judgments("q1\td7\t2\nq1\td7\t3\n", GradeScale::kSchool6);
  });
  EXPECT_NO_THROW(Judgments("q1\td7\t2\nq1\td7\t2\n", GradeScale::kSchool6));
}

TEST(ParseRunsTest, Examples) {
  const auto lists = Runs("q1\tA\t2\tdb\nq1\tA\t1\tda\nq1\tB\t1\tdc\n");
  ASSERT_EQ(lists.size(), 2u);
  EXPECT_EQ(lists[0], (RankedList{"q1", "A", {"da", "db"}}));
  EXPECT_EQ(lists[1], (RankedList{"q1", "B", {"dc"}}));
}

TEST(ParseRunsTest, Errors) {
  ExpectError(ErrorCode::kRankGap, 2,
              [] { Runs("q1\tA\t1\tda\nq1\tA\t3\tdb\n"); });
  ExpectError(ErrorCode::kDuplicateDoc, 2,
              [] { Runs("q1\tA\t1\tda\nq1\tA\t2\tda\n"); });
  ExpectError(ErrorCode::kDuplicateRank, 2,
              [] { Runs("q1\tA\t1\tda\nq1\tA\t1\tdb\n"); });
  ExpectError(ErrorCode::kParseError, 1, [] { Runs("q1\tA\t0\tda\n"); });
  ExpectError(ErrorCode::kParseError, 1, [] { Runs("q1\tA\tx\tda\n"); });
  ExpectError(ErrorCode::kParseError, 1, [] { Runs("q1\tA\t1\n"); });
}

TEST(ParsePreferencesTest, Examples) {
  EXPECT_EQ(Prefs("q1\tFIRST\n"), (PreferenceMap{{"q1", Verdict::kFirst}}));
  EXPECT_EQ(Prefs("q1\tTIE\n"), (PreferenceMap{{"q1", Verdict::kTie}}));
  ExpectError(ErrorCode::kDuplicatePreference, 2,
              [] { Prefs("q1\tFIRST\nq1\tFIRST\n"); });
  ExpectError(ErrorCode::kParseError, 1, [] { Prefs("q1\tBOTH\n"); });
}

TEST(PairListsTest, GroupsByQuery) {
  const auto pairs = PairLists(Runs(
      "q2\tX\t1\ta\nq1\tB\t1\ta\nq1\tA\t1\tb\nq2\tY\t1\tb\n"));
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0].query_id, "q1");
  EXPECT_EQ(pairs[0].first.list_id, "B");
  EXPECT_EQ(pairs[1].second.list_id, "Y");
  EXPECT_THROW(PairLists(Runs("q1\tA\t1\ta\n")), Error);
}

TEST(RoundTripTest, SimulatedBundles) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SimConfig config;
    config.seed = seed;
    config.num_queries = 12;
    config.docs_per_query = 15;
    config.grade_noise = 0.3;
    const StudyBundle bundle = GenerateStudy(config).bundle;

    for (GradeScale scale : {GradeScale::kSchool6, GradeScale::kUnit}) {
      std::ostringstream j;
      WriteJudgments(j, bundle.judgments, scale);
      std::istringstream jin(j.str());
      EXPECT_EQ(ParseJudgments(jin, scale), bundle.judgments);
    }
    std::ostringstream r;
    WriteRuns(r, FlattenPairs(bundle.pairs));
    std::istringstream rin(r.str());
    EXPECT_EQ(PairLists(ParseRuns(rin)), bundle.pairs);
    std::ostringstream p;
    WritePreferences(p, bundle.prefs);
    std::istringstream pin(p.str());
    EXPECT_EQ(ParsePreferences(pin), bundle.prefs);
  }
}

TEST(RoundTripTest, UnitScaleKeepsFullPrecision) {
  JudgmentSet js;
  js.Add("q", "a", RelevanceGrade(0.1 + 0.2));
  js.Add("q", "b", RelevanceGrade(1.0 / 3.0));
  std::ostringstream out;
  WriteJudgments(out, js, GradeScale::kUnit);
  std::istringstream in(out.str());
  EXPECT_EQ(ParseJudgments(in, GradeScale::kUnit), js);
}

SweepResult SmallResult() {
  SweepResult result;
  SweepCell cell(CellKey{MetricKind::Ndcg(), Cutoff(5)});
  cell.curve = {{0.0, 1.0}};
  cell.best = cell.curve.front();
  cell.preferences = 3;
  cell.dropped = 1;
  result.cells.emplace(cell.key, cell);
  return result;
}

TEST(WriteReportTest, SingleCellCsv) {
  std::ostringstream out;
  WriteReport(out, SmallResult(), ReportFormat::kCsv);
  EXPECT_EQ(out.str(), "metric,cutoff,threshold,pir\nndcg,5,0.000000,1.000000\n");
}

TEST(WriteReportTest, CsvRowsSortedAndMetaPrefixed) {
  SweepResult result = SmallResult();
  for (const auto& kind : {MetricKind::Precision(), MetricKind::AveragePrecision()}) {
    for (int k : {10, 2}) {
      SweepCell cell(CellKey{kind, Cutoff(k)});
      cell.curve = {{0.0, -1.0 / 3.0}, {0.01, 0.5}};
      result.cells.emplace(cell.key, cell);
    }
  }
  SweepCell failed(CellKey{MetricKind::Dcg(10), Cutoff(1)});
  failed.error = "NoPreferences: none";
  result.cells.emplace(failed.key, failed);

  const ReportMeta meta = {{"tool", "prefeval test"}, {"seed", "7"}};
  std::ostringstream out;
  WriteReport(out, result, ReportFormat::kCsv, &meta);
  EXPECT_EQ(out.str(),
            "# tool: prefeval test\n"
            "# seed: 7\n"
            "metric,cutoff,threshold,pir\n"
            "ap,2,0.000000,-0.333333\n"
            "ap,2,0.010000,0.500000\n"
            "ap,10,0.000000,-0.333333\n"
            "ap,10,0.010000,0.500000\n"
            "ndcg,5,0.000000,1.000000\n"
            "precision,2,0.000000,-0.333333\n"
            "precision,2,0.010000,0.500000\n"
            "precision,10,0.000000,-0.333333\n"
            "precision,10,0.010000,0.500000\n");

  std::ostringstream json_out;
  WriteReport(json_out, result, ReportFormat::kJson, &meta);
  const auto doc = nlohmann::json::parse(json_out.str());
  EXPECT_EQ(doc["meta"]["seed"], "7");
  EXPECT_EQ(doc["cells"].size(), 9u);
  ASSERT_EQ(doc["best"].size(), 6u);
  const auto& dcg = doc["best"][2];
  EXPECT_EQ(dcg["metric"], "dcg_b10");
  EXPECT_TRUE(dcg["pir"].is_null());
  EXPECT_EQ(dcg["error"], "NoPreferences: none");
  const auto& ndcg = doc["best"][3];
  EXPECT_EQ(ndcg["metric"], "ndcg");
  EXPECT_EQ(ndcg["threshold"], 0.0);
  EXPECT_EQ(ndcg["pir"], 1.0);
  EXPECT_EQ(ndcg["dropped"], 1);
}

TEST(WriteReportTest, ByteIdenticalAcrossCalls) {
  const auto result = SmallResult();
  for (auto format : {ReportFormat::kCsv, ReportFormat::kJson}) {
    std::ostringstream a;
    std::ostringstream b;
    WriteReport(a, result, format);
    WriteReport(b, result, format);
    EXPECT_EQ(a.str(), b.str());
  }
}

TEST(FileTest, AtomicWriteAndRead) {
  const auto dir = std::filesystem::temp_directory_path() / "prefeval_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.txt";
  WriteFileAtomic(path, "abc\n");
  EXPECT_EQ(ReadFile(path), "abc\n");
  EXPECT_FALSE(std::filesystem::exists(dir / "out.txt.tmp"));
  ExpectError(ErrorCode::kIo, 0, [&] { ReadFile(dir / "missing.tsv"); });
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace prefeval
