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

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <system_error>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "prefeval/error.hpp"

namespace prefeval {

namespace {

// Splits one line on TAB; returns false for comment and blank lines.
bool SplitRecord(const std::string& line, std::vector<std::string_view>* out) {
  out->clear();
  if (line.empty() || line.front() == '#') return false;
  if (line.find_first_not_of(" \t") == std::string::npos) return false;
  std::string_view rest(line);
  for (;;) {
    const auto tab = rest.find('\t');
    out->push_back(rest.substr(0, tab));
    if (tab == std::string_view::npos) break;
    rest.remove_prefix(tab + 1);
  }
  return true;
}

void ExpectFields(const std::vector<std::string_view>& fields,
                  std::size_t expected, std::size_t line) {
  if (fields.size() != expected) {
    throw Error(ErrorCode::kParseError,
                "expected " + std::to_string(expected) +
                    " tab-separated fields, found " +
                    std::to_string(fields.size()),
                line);
  }
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (fields[i].empty()) {
      throw Error(ErrorCode::kParseError,
                  "field " + std::to_string(i + 1) + " is empty", line);
    }
  }
}

bool ParseInt(std::string_view text, long long* value) {
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, *value);
  return ec == std::errc() && ptr == end;
}

bool ParseReal(std::string_view text, double* value) {
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, *value);
  return ec == std::errc() && ptr == end && std::isfinite(*value);
}

RelevanceGrade ParseGradeField(std::string_view text, GradeScale scale,
                               std::size_t line) {
  if (scale == GradeScale::kSchool6) {
    long long grade = 0;
    if (ParseInt(text, &grade)) {
      if (grade < 1 || grade > 6) {
        throw Error(ErrorCode::kOutOfScale,
                    "school grade " + std::string(text) + " is not in 1..6",
                    line);
      }
      return ConvertSchoolGrade(static_cast<int>(grade));
    }
    double real = 0.0;
    if (ParseReal(text, &real)) {
      throw Error(ErrorCode::kOutOfScale,
                  "school grade " + std::string(text) + " is not an integer",
                  line);
    }
    throw Error(ErrorCode::kParseError,
                "grade '" + std::string(text) + "' is not a number", line);
  }
  double real = 0.0;
  if (!ParseReal(text, &real)) {
    throw Error(ErrorCode::kParseError,
                "grade '" + std::string(text) + "' is not a number", line);
  }
  if (real < 0.0 || real > 1.0) {
    throw Error(ErrorCode::kOutOfScale,
                "grade " + std::string(text) + " is outside [0, 1]", line);
  }
  return RelevanceGrade(real);
}

std::string ShortestReal(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

}  // namespace

GradeScale ParseGradeScale(std::string_view text) {
  if (text == "school6") return GradeScale::kSchool6;
  if (text == "unit") return GradeScale::kUnit;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown grade scale '" + std::string(text) + "'");
}

RelevanceGrade ConvertSchoolGrade(int grade) {
  if (grade < 1 || grade > 6) {
    throw Error(ErrorCode::kOutOfScale,
                "school grade " + std::to_string(grade) + " is not in 1..6");
  }
  return RelevanceGrade(static_cast<double>(6 - grade) / 5.0);
}

int ToSchoolGrade(RelevanceGrade grade) {
  const int school = 6 - static_cast<int>(std::lround(grade.value() * 5.0));
  if (ConvertSchoolGrade(school).value() != grade.value()) {
    throw Error(ErrorCode::kOutOfScale,
                "grade " + ShortestReal(grade.value()) +
                    " is not on the six-point lattice");
  }
  return school;
}

JudgmentSet ParseJudgments(std::istream& in, GradeScale scale,
                           RelevanceGrade default_grade) {
  JudgmentSet judgments(default_grade);
  std::string line;
  std::vector<std::string_view> fields;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (!SplitRecord(line, &fields)) continue;
    ExpectFields(fields, 3, line_no);
    const RelevanceGrade grade = ParseGradeField(fields[2], scale, line_no);
    try {
      judgments.Add(fields[0], fields[1], grade);
    } catch (const Error& e) {
      throw Error(e.code(),
                  "conflicting grades for (" + std::string(fields[0]) + ", " +
                      std::string(fields[1]) + ")",
                  line_no);
    }
  }
  return judgments;
}

std::vector<RankedList> ParseRuns(std::istream& in) {
  struct Entry {
    long long rank;
    std::string doc;
    std::size_t line;
  };
  struct Pending {
    std::string query_id;
    std::string list_id;
    std::vector<Entry> entries;
    std::unordered_set<std::string> docs;
    std::unordered_set<long long> ranks;
  };
  std::vector<Pending> pending;
  std::map<std::pair<std::string, std::string>, std::size_t> index;

  std::string line;
  std::vector<std::string_view> fields;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (!SplitRecord(line, &fields)) continue;
    ExpectFields(fields, 4, line_no);
    long long rank = 0;
    if (!ParseInt(fields[2], &rank) || rank < 1) {
      throw Error(ErrorCode::kParseError,
                  "rank '" + std::string(fields[2]) +
                      "' is not a positive integer",
                  line_no);
    }
    auto key = std::make_pair(std::string(fields[0]), std::string(fields[1]));
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, pending.size()).first;
      pending.push_back(Pending{key.first, key.second, {}, {}, {}});
    }
    Pending& list = pending[it->second];
    std::string doc(fields[3]);
    if (!list.ranks.insert(rank).second) {
      throw Error(ErrorCode::kDuplicateRank,
                  "rank " + std::to_string(rank) + " repeated in list " +
                      list.query_id + "/" + list.list_id,
                  line_no);
    }
    if (!list.docs.insert(doc).second) {
      throw Error(ErrorCode::kDuplicateDoc,
                  "document " + doc + " repeated in list " + list.query_id +
                      "/" + list.list_id,
                  line_no);
    }
    list.entries.push_back({rank, std::move(doc), line_no});
  }

  std::vector<RankedList> lists;
  lists.reserve(pending.size());
  for (auto& p : pending) {
    std::sort(p.entries.begin(), p.entries.end(),
              [](const Entry& a, const Entry& b) { return a.rank < b.rank; });
    RankedList list{p.query_id, p.list_id, {}};
    list.docs.reserve(p.entries.size());
    for (std::size_t i = 0; i < p.entries.size(); ++i) {
      const auto expected = static_cast<long long>(i + 1);
      if (p.entries[i].rank != expected) {
        throw Error(ErrorCode::kRankGap,
                    "list " + p.query_id + "/" + p.list_id +
                        " is missing rank " + std::to_string(expected),
                    p.entries[i].line);
      }
      list.docs.push_back(std::move(p.entries[i].doc));
    }
    lists.push_back(std::move(list));
  }
  return lists;
}

PreferenceMap ParsePreferences(std::istream& in) {
  PreferenceMap prefs;
  std::string line;
  std::vector<std::string_view> fields;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (!SplitRecord(line, &fields)) continue;
    ExpectFields(fields, 2, line_no);
    Verdict verdict;
    try {
      verdict = ParseVerdict(fields[1]);
    } catch (const Error& e) {
      throw Error(ErrorCode::kParseError,
                  "unknown verdict '" + std::string(fields[1]) + "'",
                  line_no);
    }
    if (!prefs.emplace(std::string(fields[0]), verdict).second) {
      throw Error(ErrorCode::kDuplicatePreference,
                  "second preference record for query " +
                      std::string(fields[0]),
                  line_no);
    }
  }
  return prefs;
}

void WriteJudgments(std::ostream& out, const JudgmentSet& judgments,
                    GradeScale scale) {
  for (const auto& [query, docs] : judgments.storage()) {
    for (const auto& [doc, grade] : docs) {
      out << query << '\t' << doc << '\t';
      if (scale == GradeScale::kSchool6) {
        out << ToSchoolGrade(RelevanceGrade(grade));
      } else {
        out << ShortestReal(grade);
      }
      out << '\n';
    }
  }
}

void WriteRuns(std::ostream& out, std::span<const RankedList> lists) {
  for (const auto& list : lists) {
    for (std::size_t i = 0; i < list.docs.size(); ++i) {
      out << list.query_id << '\t' << list.list_id << '\t' << (i + 1) << '\t'
          << list.docs[i] << '\n';
    }
  }
}

void WritePreferences(std::ostream& out, const PreferenceMap& prefs) {
  for (const auto& [query, verdict] : prefs) {
    out << query << '\t' << VerdictName(verdict) << '\n';
  }
}

std::vector<ListPair> PairLists(const std::vector<RankedList>& lists) {
  std::map<std::string, std::vector<const RankedList*>> by_query;
  for (const auto& list : lists) by_query[list.query_id].push_back(&list);
  std::vector<ListPair> pairs;
  pairs.reserve(by_query.size());
  for (const auto& [query, group] : by_query) {
    if (group.size() != 2) {
      throw Error(ErrorCode::kInvalidArgument,
                  "query " + query + " has " + std::to_string(group.size()) +
                      " ranked lists; exactly two are required");
    }
    pairs.push_back(MakeListPair(*group[0], *group[1]));
  }
  return pairs;
}

std::vector<RankedList> FlattenPairs(const std::vector<ListPair>& pairs) {
  std::vector<RankedList> lists;
  lists.reserve(pairs.size() * 2);
  for (const auto& pair : pairs) {
    lists.push_back(pair.first);
    lists.push_back(pair.second);
  }
  return lists;
}

void ValidateBundle(const StudyBundle& bundle) {
  for (const auto& pair : bundle.pairs) {
    if (bundle.prefs.find(pair.query_id) == bundle.prefs.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "query " + pair.query_id + " has no preference record");
    }
  }
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFileAtomic(const std::filesystem::path& path,
                     std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw Error(ErrorCode::kIo, "short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::kIo, "cannot rename onto " + path.string());
  }
}

ReportFormat ParseReportFormat(std::string_view text) {
  if (text == "csv") return ReportFormat::kCsv;
  if (text == "json") return ReportFormat::kJson;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown report format '" + std::string(text) + "'");
}

std::string MetricLabel(const MetricKind& kind) {
  std::string label(kind.name());
  if (kind.has_log_base() && kind.log_base() != MetricKind::kDefaultLogBase) {
    label += "_b" + ShortestReal(kind.log_base());
  }
  return label;
}

std::string FormatFixed6(double value) {
  char buf[64];
  const int n = std::snprintf(buf, sizeof(buf), "%.6f", value);
  std::string out(buf, static_cast<std::size_t>(n));
  if (out == "-0.000000") out = "0.000000";
  return out;
}

namespace {

void WriteCsv(std::ostream& out, const SweepResult& result,
              const ReportMeta* meta) {
  if (meta != nullptr) {
    for (const auto& [key, value] : *meta) {
      out << "# " << key << ": " << value << '\n';
    }
  }
  out << "metric,cutoff,threshold,pir\n";
  for (const auto& [key, cell] : result.cells) {
    const std::string label = MetricLabel(key.metric);
    for (const auto& point : cell.curve) {
      out << label << ',' << key.cutoff.value() << ','
          << FormatFixed6(point.threshold) << ',' << FormatFixed6(point.pir)
          << '\n';
    }
  }
}

void WriteJson(std::ostream& out, const SweepResult& result,
               const ReportMeta* meta) {
  using nlohmann::ordered_json;
  ordered_json doc = ordered_json::object();
  if (meta != nullptr) {
    ordered_json m = ordered_json::object();
    for (const auto& [key, value] : *meta) m[key] = value;
    doc["meta"] = std::move(m);
  }
  ordered_json cells = ordered_json::array();
  ordered_json best = ordered_json::array();
  for (const auto& [key, cell] : result.cells) {
    const std::string label = MetricLabel(key.metric);
    for (const auto& point : cell.curve) {
      cells.push_back({{"metric", label},
                       {"cutoff", key.cutoff.value()},
                       {"threshold", point.threshold},
                       {"pir", point.pir}});
    }
    ordered_json row = {{"metric", label}, {"cutoff", key.cutoff.value()}};
    if (cell.best) {
      row["threshold"] = cell.best->threshold;
      row["pir"] = cell.best->pir;
    } else {
      row["threshold"] = nullptr;
      row["pir"] = nullptr;
    }
    row["preferences"] = cell.preferences;
    row["ties"] = cell.ties;
    row["dropped"] = cell.dropped;
    row["unjudged"] = cell.unjudged;
    if (!cell.error.empty()) row["error"] = cell.error;
    best.push_back(std::move(row));
  }
  doc["cells"] = std::move(cells);
  doc["best"] = std::move(best);
  out << doc.dump(2) << '\n';
}

}  // namespace

void WriteReport(std::ostream& out, const SweepResult& result,
                 ReportFormat format, const ReportMeta* meta) {
  if (format == ReportFormat::kCsv) {
    WriteCsv(out, result, meta);
  } else {
    WriteJson(out, result, meta);
  }
}

}  // namespace prefeval
