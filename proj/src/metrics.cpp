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

#include "prefeval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "prefeval/error.hpp"

namespace prefeval {

namespace gains {

namespace {

std::size_t Depth(std::span<const double> gains, int k) {
  return std::min(gains.size(), static_cast<std::size_t>(std::max(k, 0)));
}

}  // namespace

double CumulatedGain(std::span<const double> gains, int k) {
  double cg = 0.0;
  const std::size_t depth = Depth(gains, k);
  for (std::size_t i = 0; i < depth; ++i) cg += gains[i];
  return cg;
}

double Dcg(std::span<const double> gains, int k, double log_base) {
  const double log_of_base = std::log(log_base);
  const std::size_t depth = Depth(gains, k);
  double dcg = 0.0;
  for (std::size_t i = 0; i < depth; ++i) {
    const double rank = static_cast<double>(i + 1);
    if (rank < log_base) {
      dcg += gains[i];
    } else {
      dcg += gains[i] / (std::log(rank) / log_of_base);
    }
  }
  return dcg;
}

double Precision(std::span<const double> gains, int k) {
  return CumulatedGain(gains, k) / static_cast<double>(k);
}

double IdealMass(std::span<const double> candidate_grades, int k) {
  std::vector<double> sorted(candidate_grades.begin(), candidate_grades.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return CumulatedGain(sorted, k);
}

double AveragePrecision(std::span<const double> gains, int k,
                        double ideal_mass) {
  if (!(ideal_mass > 0.0)) {
    throw Error(ErrorCode::kIdealGainZero,
                "ideal relevance mass is zero; average precision undefined");
  }
  const std::size_t depth = Depth(gains, k);
  double cumulative = 0.0;
  double sum = 0.0;
  for (std::size_t j = 0; j < depth; ++j) {
    cumulative += gains[j];
    sum += gains[j] * (cumulative / static_cast<double>(j + 1));
  }
  return sum / ideal_mass;
}

}  // namespace gains

std::vector<double> ResolveGains(const RankedList& list,
                                 const JudgmentSet& judgments, Cutoff k,
                                 EvalStats* stats) {
  const std::size_t depth =
      std::min(list.docs.size(), static_cast<std::size_t>(k.value()));
  std::vector<double> out;
  out.reserve(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    const auto grade = judgments.Find(list.query_id, list.docs[i]);
    if (!grade && stats != nullptr) ++stats->unjudged;
    out.push_back(grade.value_or(judgments.default_grade()));
  }
  return out;
}

std::vector<std::string> CandidatePool(const RankedList& first,
                                       const RankedList& second) {
  std::vector<std::string> pool;
  pool.reserve(first.docs.size() + second.docs.size());
  pool.insert(pool.end(), first.docs.begin(), first.docs.end());
  pool.insert(pool.end(), second.docs.begin(), second.docs.end());
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  return pool;
}

std::vector<std::string> CandidatePool(std::span<const RankedList> lists) {
  std::vector<std::string> pool;
  for (const auto& list : lists) {
    pool.insert(pool.end(), list.docs.begin(), list.docs.end());
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  return pool;
}

namespace {

struct GradedDoc {
  std::string_view doc;
  double grade;
};

std::vector<GradedDoc> SortIdeal(std::string_view query_id,
                                 const JudgmentSet& judgments,
                                 std::span<const std::string> candidate_docs) {
  std::vector<GradedDoc> graded;
  graded.reserve(candidate_docs.size());
  for (const auto& doc : candidate_docs) {
    graded.push_back({doc, judgments.Grade(query_id, doc)});
  }
  std::sort(graded.begin(), graded.end(),
            [](const GradedDoc& a, const GradedDoc& b) {
              if (a.grade != b.grade) return a.grade > b.grade;
              return a.doc < b.doc;
            });
  graded.erase(std::unique(graded.begin(), graded.end(),
                           [](const GradedDoc& a, const GradedDoc& b) {
                             return a.doc == b.doc;
                           }),
               graded.end());
  return graded;
}

std::vector<double> IdealGains(std::string_view query_id,
                               const JudgmentSet& judgments,
                               std::span<const std::string> candidate_docs,
                               Cutoff k) {
  if (candidate_docs.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "empty candidate set for query " + std::string(query_id));
  }
  const auto sorted = SortIdeal(query_id, judgments, candidate_docs);
  const std::size_t depth =
      std::min(sorted.size(), static_cast<std::size_t>(k.value()));
  std::vector<double> out;
  out.reserve(depth);
  for (std::size_t i = 0; i < depth; ++i) out.push_back(sorted[i].grade);
  return out;
}

}  // namespace

std::vector<std::string> IdealOrdering(
    std::string_view query_id, const JudgmentSet& judgments,
    std::span<const std::string> candidate_docs) {
  std::vector<std::string> out;
  for (const auto& g : SortIdeal(query_id, judgments, candidate_docs)) {
    out.emplace_back(g.doc);
  }
  return out;
}

double CumulatedGainAtK(const RankedList& list, const JudgmentSet& judgments,
                        Cutoff k, EvalStats* stats) {
  return gains::CumulatedGain(ResolveGains(list, judgments, k, stats),
                              k.value());
}

double DcgAtK(const RankedList& list, const JudgmentSet& judgments, Cutoff k,
              double log_base, EvalStats* stats) {
  return gains::Dcg(ResolveGains(list, judgments, k, stats), k.value(),
                    log_base);
}

double IdealDcgAtK(std::string_view query_id, const JudgmentSet& judgments,
                   std::span<const std::string> candidate_docs, Cutoff k,
                   double log_base) {
  return gains::Dcg(IdealGains(query_id, judgments, candidate_docs, k),
                    k.value(), log_base);
}

double NdcgAtK(const RankedList& list, const JudgmentSet& judgments,
               std::span<const std::string> candidate_docs, Cutoff k,
               double log_base, EvalStats* stats) {
  const double ideal =
      IdealDcgAtK(list.query_id, judgments, candidate_docs, k, log_base);
  if (!(ideal > 0.0)) {
    throw Error(ErrorCode::kIdealGainZero,
                "ideal DCG is zero for query " + list.query_id);
  }
  return DcgAtK(list, judgments, k, log_base, stats) / ideal;
}

double PrecisionAtK(const RankedList& list, const JudgmentSet& judgments,
                    Cutoff k, EvalStats* stats) {
  return gains::Precision(ResolveGains(list, judgments, k, stats), k.value());
}

double AveragePrecisionAtK(const RankedList& list,
                           const JudgmentSet& judgments,
                           std::span<const std::string> candidate_docs,
                           Cutoff k, EvalStats* stats) {
  const auto ideal = IdealGains(list.query_id, judgments, candidate_docs, k);
  const double mass = gains::CumulatedGain(ideal, k.value());
  if (!(mass > 0.0)) {
    throw Error(ErrorCode::kIdealGainZero,
                "ideal relevance mass is zero for query " + list.query_id);
  }
  return gains::AveragePrecision(ResolveGains(list, judgments, k, stats),
                                 k.value(), mass);
}

double MeanOverQueries(const std::map<std::string, double>& per_query) {
  if (per_query.empty()) {
    throw Error(ErrorCode::kEmptyQuerySet, "no per-query values to average");
  }
  double sum = 0.0;
  for (const auto& [query, value] : per_query) sum += value;
  return sum / static_cast<double>(per_query.size());
}

double MetricEval(const MetricKind& kind, const RankedList& list,
                  const JudgmentSet& judgments,
                  std::span<const std::string> candidate_docs, Cutoff k,
                  EvalStats* stats) {
  switch (kind.metric()) {
    case Metric::kPrecision:
      return PrecisionAtK(list, judgments, k, stats);
    case Metric::kAveragePrecision:
      return AveragePrecisionAtK(list, judgments, candidate_docs, k, stats);
    case Metric::kCumulatedGain:
      return CumulatedGainAtK(list, judgments, k, stats);
    case Metric::kDcg:
      return DcgAtK(list, judgments, k, kind.log_base(), stats);
    case Metric::kNdcg:
      return NdcgAtK(list, judgments, candidate_docs, k, kind.log_base(),
                     stats);
  }
  throw Error(ErrorCode::kInvalidArgument, "unhandled metric kind");
}

}  // namespace prefeval
