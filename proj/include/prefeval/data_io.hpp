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

// Readers and writers for the study files and sweep reports.
//
// Input files are UTF-8, LF-terminated, TAB-separated. Lines whose first
// character is '#' and blank lines are skipped.
//
//   judgments:   query_id <TAB> doc_id <TAB> grade
//   runs:        query_id <TAB> list_id <TAB> rank <TAB> doc_id
//   preferences: query_id <TAB> FIRST|SECOND|TIE
//
// Parse errors carry the 1-based line number of the offending record.

#ifndef PREFEVAL_DATA_IO_HPP_
#define PREFEVAL_DATA_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prefeval/preference.hpp"
#include "prefeval/types.hpp"

namespace prefeval {

// SCHOOL6: integer grades 1 (best) .. 6 (worst). UNIT: reals in [0, 1].
enum class GradeScale { kSchool6, kUnit };

GradeScale ParseGradeScale(std::string_view text);

// 1 -> 1.0, 2 -> 0.8, ..., 6 -> 0.0. Throws Error(kOutOfScale) outside 1..6.
RelevanceGrade ConvertSchoolGrade(int grade);

// Inverse of ConvertSchoolGrade; throws Error(kOutOfScale) for grades off
// the 0.2 lattice.
int ToSchoolGrade(RelevanceGrade grade);

JudgmentSet ParseJudgments(std::istream& in, GradeScale scale,
                           RelevanceGrade default_grade = RelevanceGrade(0.0));

// One list per (query_id, list_id) in order of first appearance, documents
// in rank order. Ranks of each list must be exactly 1..n.
std::vector<RankedList> ParseRuns(std::istream& in);

PreferenceMap ParsePreferences(std::istream& in);

void WriteJudgments(std::ostream& out, const JudgmentSet& judgments,
                    GradeScale scale);
void WriteRuns(std::ostream& out, std::span<const RankedList> lists);
void WritePreferences(std::ostream& out, const PreferenceMap& prefs);

struct StudyBundle {
  JudgmentSet judgments;
  std::vector<ListPair> pairs;
  PreferenceMap prefs;

  friend bool operator==(const StudyBundle&, const StudyBundle&) = default;
};

// Groups lists by query, ordered by query id. Each query must have exactly
// two lists; the one that appeared first becomes `first`.
std::vector<ListPair> PairLists(const std::vector<RankedList>& lists);
std::vector<RankedList> FlattenPairs(const std::vector<ListPair>& pairs);

// Every pair's query must have a preference record.
void ValidateBundle(const StudyBundle& bundle);

// Reads a whole file; Error(kIo) when it cannot be opened.
std::string ReadFile(const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it over `path`, so readers
// never observe a partial file.
void WriteFileAtomic(const std::filesystem::path& path,
                     std::string_view contents);

enum class ReportFormat { kCsv, kJson };

ReportFormat ParseReportFormat(std::string_view text);

// Ordered key/value metadata. Emitted as '# key: value' lines ahead of the
// CSV header, or as the "meta" object in JSON.
using ReportMeta = std::vector<std::pair<std::string, std::string>>;

// Column label for a metric: its name, suffixed with the base when a
// discounted metric uses a base other than 2.
std::string MetricLabel(const MetricKind& kind);

// Fixed six-decimal rendering used for every real in CSV output.
std::string FormatFixed6(double value);

// CSV: header `metric,cutoff,threshold,pir` and one row per cube entry
// sorted by (metric, cutoff, threshold). JSON: `cells` and `best` arrays;
// `best` also carries per-cell diagnostics.
void WriteReport(std::ostream& out, const SweepResult& result,
                 ReportFormat format, const ReportMeta* meta = nullptr);

}  // namespace prefeval

#endif  // PREFEVAL_DATA_IO_HPP_
