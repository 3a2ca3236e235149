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

#include "prefeval/types.hpp"

#include <cmath>
#include <unordered_set>

#include "prefeval/error.hpp"

namespace prefeval {

RelevanceGrade::RelevanceGrade(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw Error(ErrorCode::kOutOfScale,
                "relevance grade " + std::to_string(value) +
                    " is outside [0, 1]");
  }
}

Cutoff::Cutoff(int k) : k_(k) {
  if (k < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "cutoff must be >= 1, got " + std::to_string(k));
  }
}

void ValidateRankedList(const RankedList& list) {
  if (list.docs.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "ranked list " + list.query_id + "/" + list.list_id +
                    " is empty");
  }
  std::unordered_set<std::string_view> seen;
  seen.reserve(list.docs.size());
  for (const auto& doc : list.docs) {
    if (!seen.insert(doc).second) {
      throw Error(ErrorCode::kDuplicateDoc,
                  "document " + doc + " repeated in list " + list.query_id +
                      "/" + list.list_id);
    }
  }
}

void JudgmentSet::Add(std::string_view query_id, std::string_view doc_id,
                      RelevanceGrade grade) {
  auto query_it = grades_.find(query_id);
  if (query_it == grades_.end()) {
    query_it = grades_.emplace(std::string(query_id), DocGrades{}).first;
  }
  auto& docs = query_it->second;
  auto doc_it = docs.find(doc_id);
  if (doc_it != docs.end()) {
    if (doc_it->second != grade.value()) {
      throw Error(ErrorCode::kDuplicateJudgment,
                  "conflicting grades for (" + std::string(query_id) + ", " +
                      std::string(doc_id) + ")");
    }
    return;
  }
  docs.emplace(std::string(doc_id), grade.value());
  ++size_;
}

std::optional<double> JudgmentSet::Find(std::string_view query_id,
                                        std::string_view doc_id) const {
  const auto query_it = grades_.find(query_id);
  if (query_it == grades_.end()) return std::nullopt;
  const auto doc_it = query_it->second.find(doc_id);
  if (doc_it == query_it->second.end()) return std::nullopt;
  return doc_it->second;
}

double JudgmentSet::Grade(std::string_view query_id,
                          std::string_view doc_id) const {
  return Find(query_id, doc_id).value_or(default_grade_);
}

std::vector<std::string> JudgmentSet::JudgedDocs(
    std::string_view query_id) const {
  std::vector<std::string> docs;
  const auto query_it = grades_.find(query_id);
  if (query_it == grades_.end()) return docs;
  docs.reserve(query_it->second.size());
  for (const auto& [doc, grade] : query_it->second) docs.push_back(doc);
  return docs;
}

namespace {

void CheckLogBase(double log_base) {
  if (!(log_base > 1.0) || !std::isfinite(log_base)) {
    throw Error(ErrorCode::kInvalidArgument,
                "log base must be a finite value > 1, got " +
                    std::to_string(log_base));
  }
}

}  // namespace

MetricKind MetricKind::Dcg(double log_base) {
  CheckLogBase(log_base);
  return MetricKind(Metric::kDcg, log_base);
}

MetricKind MetricKind::Ndcg(double log_base) {
  CheckLogBase(log_base);
  return MetricKind(Metric::kNdcg, log_base);
}

MetricKind MetricKind::Parse(std::string_view name, double log_base) {
  if (name == "precision" || name == "p") return Precision();
  if (name == "ap" || name == "map") return AveragePrecision();
  if (name == "cg") return CumulatedGain();
  if (name == "dcg") return Dcg(log_base);
  if (name == "ndcg") return Ndcg(log_base);
  throw Error(ErrorCode::kInvalidArgument,
              "unknown metric '" + std::string(name) + "'");
}

std::string_view MetricKind::name() const {
  switch (metric_) {
    case Metric::kPrecision:
      return "precision";
    case Metric::kAveragePrecision:
      return "ap";
    case Metric::kCumulatedGain:
      return "cg";
    case Metric::kDcg:
      return "dcg";
    case Metric::kNdcg:
      return "ndcg";
  }
  return "unknown";
}

std::weak_ordering operator<=>(const MetricKind& a, const MetricKind& b) {
  if (auto c = a.name() <=> b.name(); c != 0) return c;
  if (a.log_base_ < b.log_base_) return std::weak_ordering::less;
  if (b.log_base_ < a.log_base_) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

}  // namespace prefeval
