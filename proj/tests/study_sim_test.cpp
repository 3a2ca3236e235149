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

#include "prefeval/study_sim.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "prefeval/error.hpp"
#include "prefeval/metrics.hpp"

namespace prefeval {
namespace {

SimConfig NoiseFree(std::uint64_t seed, int queries, int docs) {
  SimConfig config;
  config.seed = seed;
  config.num_queries = queries;
  config.docs_per_query = docs;
  config.grade_noise = 0.0;
  config.tie_margin = 0.0;
  return config;
}

TEST(GenerateStudyTest, ShapeAndIds) {
  const auto study = GenerateStudy(NoiseFree(1, 12, 50));
  ASSERT_EQ(study.bundle.pairs.size(), 12u);
  EXPECT_EQ(study.bundle.pairs.front().query_id, "q01");
  EXPECT_EQ(study.bundle.pairs.back().query_id, "q12");
  for (const auto& pair : study.bundle.pairs) {
    EXPECT_EQ(pair.first.list_id, "original");
    EXPECT_EQ(pair.second.list_id, "randomized");
    EXPECT_EQ(pair.first.docs.size(), 50u);
    auto a = pair.first.docs;
    auto b = pair.second.docs;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.front(), "d01");
    EXPECT_TRUE(study.bundle.prefs.count(pair.query_id));
  }
  EXPECT_EQ(study.bundle.judgments.size(), 12u * 50u);
}

TEST(GenerateStudyTest, SeedDeterminism) {
  SimConfig config = NoiseFree(77, 20, 30);
  config.grade_noise = 0.15;
  config.tie_margin = 0.5;
  const auto a = GenerateStudy(config);
  const auto b = GenerateStudy(config);
  EXPECT_EQ(a.bundle, b.bundle);
  EXPECT_EQ(a.truth.relevance, b.truth.relevance);
  config.seed = 78;
  EXPECT_NE(GenerateStudy(config).bundle, a.bundle);
}

TEST(GenerateStudyTest, ZeroNoiseGradesAreQuantizedTruth) {
  const auto study = GenerateStudy(NoiseFree(3, 10, 40));
  for (const auto& [query, docs] : study.truth.relevance) {
    for (const auto& [doc, rel] : docs) {
      const double grade = study.bundle.judgments.Grade(query, doc);
      EXPECT_EQ(grade, std::round(rel * 5.0) / 5.0);
    }
  }
}

TEST(GenerateStudyTest, NoisyGradesStayOnLattice) {
  SimConfig config = NoiseFree(4, 10, 40);
  config.grade_noise = 0.4;
  const auto study = GenerateStudy(config);
  int differs = 0;
  for (const auto& [query, docs] : study.bundle.judgments.storage()) {
    for (const auto& [doc, grade] : docs) {
      EXPECT_EQ(grade * 5.0, std::round(grade * 5.0));
      if (grade != std::round(study.truth.relevance.at(query).at(doc) * 5) / 5) {
        ++differs;
      }
    }
  }
  EXPECT_GT(differs, 0);
}

TEST(GenerateStudyTest, TieIffBelowMargin) {
  SimConfig config = NoiseFree(5, 60, 20);
  config.tie_margin = 0.5;
  const auto study = GenerateStudy(config);
  int ties = 0;
  for (const auto& [query, verdict] : study.truth.preferences) {
    const auto it = study.truth.utility_delta.find(query);
    ASSERT_NE(it, study.truth.utility_delta.end());
    const double delta = it->second;
    const bool tie = verdict == Verdict::kTie;
    EXPECT_EQ(tie, std::fabs(delta) < config.tie_margin || delta == 0.0);
    if (!tie) {
      EXPECT_EQ(verdict == Verdict::kFirst, delta > 0.0);
    }
    ties += tie;
  }
  EXPECT_GT(ties, 0);
}

TEST(GenerateStudyTest, NoiseFreeUtilityAlignmentGivesPerfectPir) {
  for (const auto& utility :
       {MetricKind::Ndcg(), MetricKind::Precision(),
        MetricKind::AveragePrecision(), MetricKind::CumulatedGain()}) {
    SimConfig config = NoiseFree(13, 80, 30);
    config.utility = utility;
    config.persistence_depth = 4;
    const auto study = GenerateStudy(config);
    SweepGrid grid;
    grid.metrics = {utility};
    grid.cutoffs = {Cutoff(4)};
    const auto curve =
        ThresholdSweep(study.bundle.pairs, study.bundle.judgments,
                       study.bundle.prefs, utility, Cutoff(4), grid);
    EXPECT_EQ(curve.front().threshold, 0.0);
    EXPECT_EQ(curve.front().pir, 1.0) << utility.name();

    std::map<std::string, double> deltas;
    for (const auto& pair : study.bundle.pairs) {
      if (study.bundle.prefs.at(pair.query_id) == Verdict::kTie) continue;
      deltas[pair.query_id] =
          MetricDelta(pair, study.bundle.judgments, utility, Cutoff(4));
    }
    EXPECT_EQ(OraclePir(deltas, study.bundle.prefs, 0.0), 1.0);
  }
}

TEST(GenerateStudyTest, OriginalBeatsRandomizedOnAverage) {
  const auto study = GenerateStudy(NoiseFree(2011, 200, 50));
  std::map<std::string, double> original;
  std::map<std::string, double> randomized;
  for (const auto& pair : study.bundle.pairs) {
    const auto pool = CandidatePool(pair.first, pair.second);
    try {
      original[pair.query_id] = NdcgAtK(pair.first, study.bundle.judgments,
                                        pool, Cutoff(10), 2.0);
      randomized[pair.query_id] = NdcgAtK(pair.second, study.bundle.judgments,
                                          pool, Cutoff(10), 2.0);
    } catch (const Error&) {
    }
  }
  EXPECT_GT(MeanOverQueries(original), MeanOverQueries(randomized));
}

TEST(GenerateStudyTest, RejectsBadConfig) {
  SimConfig config;
  config.num_queries = 0;
  EXPECT_THROW(GenerateStudy(config), Error);
  config = SimConfig{};
  config.grade_noise = -1;
  EXPECT_THROW(GenerateStudy(config), Error);
  config = SimConfig{};
  config.relevance_b = 0;
  EXPECT_THROW(GenerateStudy(config), Error);
}

TEST(OraclePirTest, Fixtures) {
  const std::map<std::string, double> deltas = {
      {"q1", 0.4}, {"q2", -0.3}, {"q3", 0.05}};
  const PreferenceMap prefs = {{"q1", Verdict::kFirst},
                               {"q2", Verdict::kFirst},
                               {"q3", Verdict::kSecond}};
  EXPECT_NEAR(OraclePir(deltas, prefs, 0.1), 0.0, 1e-12);
  EXPECT_NEAR(OraclePir(deltas, prefs, 0.0), -1.0 / 3.0, 1e-12);
  const PreferenceMap right = {{"q1", Verdict::kFirst},
                               {"q2", Verdict::kSecond},
                               {"q3", Verdict::kFirst}};
  const PreferenceMap wrong = {{"q1", Verdict::kSecond},
                               {"q2", Verdict::kFirst},
                               {"q3", Verdict::kSecond}};
  EXPECT_EQ(OraclePir(deltas, right, 0.0), 1.0);
  EXPECT_EQ(OraclePir(deltas, wrong, 0.0), -1.0);
  EXPECT_THROW(OraclePir(deltas, {{"q1", Verdict::kTie}}, 0.0), Error);
}

}  // namespace
}  // namespace prefeval
