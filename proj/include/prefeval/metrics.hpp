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

// Graded relevance metrics over a single ranked list.
//
// Two layers: gain-vector kernels in `prefeval::gains` that operate on the
// grades of ranks 1..n directly, and list-level functions that resolve a
// RankedList against a JudgmentSet first. Ranks past the end of a list
// contribute gain 0 while k stays the divisor.

#ifndef PREFEVAL_METRICS_HPP_
#define PREFEVAL_METRICS_HPP_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prefeval/types.hpp"

namespace prefeval {

namespace gains {

double CumulatedGain(std::span<const double> gains, int k);

// DCG_i = CG_i for i < b, DCG_{i-1} + G_i / log_b(i) for i >= b.
double Dcg(std::span<const double> gains, int k, double log_base);

double Precision(std::span<const double> gains, int k);

// Sum of the k largest candidate grades. The graded stand-in for the count
// of relevant documents; reduces to min(k, |R|) for binary grades.
double IdealMass(std::span<const double> candidate_grades, int k);

// (1 / ideal_mass) * sum_j rel_j * (sum_{i<=j} rel_i) / j over ranks 1..k.
// Throws Error(kIdealGainZero) when ideal_mass is 0.
double AveragePrecision(std::span<const double> gains, int k,
                        double ideal_mass);

}  // namespace gains

// Diagnostics accumulated across calls; unjudged documents resolve to the
// judgment set's default grade and are counted here.
struct EvalStats {
  std::size_t unjudged = 0;
};

// Grades of ranks 1..min(k, n).
std::vector<double> ResolveGains(const RankedList& list,
                                 const JudgmentSet& judgments, Cutoff k,
                                 EvalStats* stats = nullptr);

// Sorted, de-duplicated union of the documents of the given lists.
std::vector<std::string> CandidatePool(const RankedList& first,
                                       const RankedList& second);
std::vector<std::string> CandidatePool(std::span<const RankedList> lists);

// Candidates ordered by grade descending, ties by ascending doc id.
std::vector<std::string> IdealOrdering(
    std::string_view query_id, const JudgmentSet& judgments,
    std::span<const std::string> candidate_docs);

double CumulatedGainAtK(const RankedList& list, const JudgmentSet& judgments,
                        Cutoff k, EvalStats* stats = nullptr);

double DcgAtK(const RankedList& list, const JudgmentSet& judgments, Cutoff k,
              double log_base, EvalStats* stats = nullptr);

// Throws Error(kInvalidArgument) for an empty candidate set.
double IdealDcgAtK(std::string_view query_id, const JudgmentSet& judgments,
                   std::span<const std::string> candidate_docs, Cutoff k,
                   double log_base);

// Throws Error(kIdealGainZero) when every candidate grade is 0.
double NdcgAtK(const RankedList& list, const JudgmentSet& judgments,
               std::span<const std::string> candidate_docs, Cutoff k,
               double log_base, EvalStats* stats = nullptr);

double PrecisionAtK(const RankedList& list, const JudgmentSet& judgments,
                    Cutoff k, EvalStats* stats = nullptr);

// The ideal relevance mass is taken over `candidate_docs`.
// Throws Error(kIdealGainZero) when that mass is 0.
double AveragePrecisionAtK(const RankedList& list,
                           const JudgmentSet& judgments,
                           std::span<const std::string> candidate_docs,
                           Cutoff k, EvalStats* stats = nullptr);

// Throws Error(kEmptyQuerySet) for an empty map.
double MeanOverQueries(const std::map<std::string, double>& per_query);

// Uniform dispatch over MetricKind. `candidate_docs` is only read by AP and
// nDCG.
double MetricEval(const MetricKind& kind, const RankedList& list,
                  const JudgmentSet& judgments,
                  std::span<const std::string> candidate_docs, Cutoff k,
                  EvalStats* stats = nullptr);

}  // namespace prefeval

#endif  // PREFEVAL_METRICS_HPP_
