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

// Value types shared by every module: grades, ranked lists, judgment sets,
// cutoffs and metric selectors.

#ifndef PREFEVAL_TYPES_HPP_
#define PREFEVAL_TYPES_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prefeval {

// Graded relevance in the unit interval; 0 is irrelevant, 1 fully relevant.
class RelevanceGrade {
 public:
  // Throws Error(kOutOfScale) outside [0, 1] or for NaN.
  explicit RelevanceGrade(double value);

  double value() const { return value_; }

  friend bool operator==(RelevanceGrade, RelevanceGrade) = default;

 private:
  double value_;
};

// Evaluation depth, k >= 1.
class Cutoff {
 public:
  explicit Cutoff(int k);

  int value() const { return k_; }

  friend auto operator<=>(Cutoff, Cutoff) = default;

 private:
  int k_;
};

// One system's ranking for one query. docs[0] is rank 1.
struct RankedList {
  std::string query_id;
  std::string list_id;
  std::vector<std::string> docs;

  friend bool operator==(const RankedList&, const RankedList&) = default;
};

// Throws Error(kDuplicateDoc) when a document appears twice and
// Error(kInvalidArgument) when the list is empty.
void ValidateRankedList(const RankedList& list);

// (query, doc) -> grade with a total lookup: unjudged pairs resolve to the
// default grade.
class JudgmentSet {
 public:
  using DocGrades = std::map<std::string, double, std::less<>>;
  using Storage = std::map<std::string, DocGrades, std::less<>>;

  JudgmentSet() : default_grade_(0.0) {}
  explicit JudgmentSet(RelevanceGrade default_grade)
      : default_grade_(default_grade.value()) {}

  // Re-adding an identical grade is a no-op; a conflicting grade throws
  // Error(kDuplicateJudgment).
  void Add(std::string_view query_id, std::string_view doc_id,
           RelevanceGrade grade);

  std::optional<double> Find(std::string_view query_id,
                             std::string_view doc_id) const;
  double Grade(std::string_view query_id, std::string_view doc_id) const;
  bool Contains(std::string_view query_id, std::string_view doc_id) const {
    return Find(query_id, doc_id).has_value();
  }

  double default_grade() const { return default_grade_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  // Judged documents for a query in ascending doc_id order.
  std::vector<std::string> JudgedDocs(std::string_view query_id) const;

  const Storage& storage() const { return grades_; }

  friend bool operator==(const JudgmentSet&, const JudgmentSet&) = default;

 private:
  Storage grades_;
  double default_grade_;
  std::size_t size_ = 0;
};

enum class Metric { kPrecision, kAveragePrecision, kCumulatedGain, kDcg, kNdcg };

// Metric selector. DCG and nDCG carry a log base b > 1.
class MetricKind {
 public:
  static constexpr double kDefaultLogBase = 2.0;

  static MetricKind Precision() { return MetricKind(Metric::kPrecision, 0); }
  static MetricKind AveragePrecision() {
    return MetricKind(Metric::kAveragePrecision, 0);
  }
  static MetricKind CumulatedGain() {
    return MetricKind(Metric::kCumulatedGain, 0);
  }
  static MetricKind Dcg(double log_base = kDefaultLogBase);
  static MetricKind Ndcg(double log_base = kDefaultLogBase);

  // Accepts precision, ap (alias map), cg, dcg, ndcg. The base is ignored
  // for metrics without a discount.
  static MetricKind Parse(std::string_view name,
                          double log_base = kDefaultLogBase);

  Metric metric() const { return metric_; }
  double log_base() const { return log_base_; }
  std::string_view name() const;
  bool has_log_base() const {
    return metric_ == Metric::kDcg || metric_ == Metric::kNdcg;
  }
  // Precision, AP and nDCG fall in [0, 1]; CG and DCG are unbounded.
  bool unit_range() const {
    return metric_ != Metric::kCumulatedGain && metric_ != Metric::kDcg;
  }

  // Orders by name, then log base.
  friend std::weak_ordering operator<=>(const MetricKind& a,
                                        const MetricKind& b);
  friend bool operator==(const MetricKind& a, const MetricKind& b) {
    return a.metric_ == b.metric_ && a.log_base_ == b.log_base_;
  }

 private:
  MetricKind(Metric metric, double log_base)
      : metric_(metric), log_base_(log_base) {}

  Metric metric_;
  double log_base_;
};

}  // namespace prefeval

#endif  // PREFEVAL_TYPES_HPP_
