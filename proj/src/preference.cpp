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

#include "prefeval/preference.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "prefeval/error.hpp"
#include "prefeval/kernels/term_count.hpp"

namespace prefeval {

std::string_view VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kFirst:
      return "FIRST";
    case Verdict::kSecond:
      return "SECOND";
    case Verdict::kTie:
      return "TIE";
  }
  return "UNKNOWN";
}

Verdict ParseVerdict(std::string_view text) {
  if (text == "FIRST") return Verdict::kFirst;
  if (text == "SECOND") return Verdict::kSecond;
  if (text == "TIE") return Verdict::kTie;
  throw Error(ErrorCode::kParseError,
              "unknown verdict '" + std::string(text) + "'");
}

ListPair MakeListPair(RankedList first, RankedList second) {
  ValidateRankedList(first);
  ValidateRankedList(second);
  if (first.query_id != second.query_id) {
    throw Error(ErrorCode::kInvalidArgument,
                "list pair mixes queries " + first.query_id + " and " +
                    second.query_id);
  }
  if (first.list_id == second.list_id) {
    throw Error(ErrorCode::kInvalidArgument,
                "list pair for query " + first.query_id +
                    " uses the same list id twice: " + first.list_id);
  }
  ListPair pair;
  pair.query_id = first.query_id;
  pair.first = std::move(first);
  pair.second = std::move(second);
  return pair;
}

double MetricDelta(const ListPair& pair, const JudgmentSet& judgments,
                   const MetricKind& kind, Cutoff k, EvalStats* stats) {
  const auto pool = CandidatePool(pair.first, pair.second);
  const double first = MetricEval(kind, pair.first, judgments, pool, k, stats);
  const double second =
      MetricEval(kind, pair.second, judgments, pool, k, stats);
  return first - second;
}

namespace {

double PreferenceSign(Verdict verdict) {
  return verdict == Verdict::kFirst ? 1.0 : -1.0;
}

void CheckThreshold(double threshold) {
  if (!(threshold >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "threshold must be >= 0, got " + std::to_string(threshold));
  }
}

// Preference-bearing queries of one (metric, cutoff) cell, laid out for the
// counting kernels.
struct CellInputs {
  std::vector<double> deltas;
  std::vector<double> signs;
  std::size_t ties = 0;
  std::size_t dropped = 0;
  std::size_t unjudged = 0;
};

double RatioFromCounts(const kernels::TermCounts& counts,
                       std::size_t preferences, std::size_t ties,
                       const PirOptions& options) {
  const std::size_t denominator =
      preferences + (options.ties_in_denominator ? ties : 0);
  return static_cast<double>(counts.net()) /
         static_cast<double>(denominator);
}

const Verdict& RequirePreference(const PreferenceMap& prefs,
                                 const std::string& query_id) {
  const auto it = prefs.find(query_id);
  if (it == prefs.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "no preference judgment for query " + query_id);
  }
  return it->second;
}

CellInputs BuildCellInputs(const std::vector<ListPair>& pairs,
                           const JudgmentSet& judgments,
                           const PreferenceMap& prefs, const MetricKind& kind,
                           Cutoff k) {
  CellInputs in;
  in.deltas.reserve(pairs.size());
  in.signs.reserve(pairs.size());
  EvalStats stats;
  for (const auto& pair : pairs) {
    const Verdict verdict = RequirePreference(prefs, pair.query_id);
    if (verdict == Verdict::kTie) {
      ++in.ties;
      continue;
    }
    double delta = 0.0;
    try {
      delta = MetricDelta(pair, judgments, kind, k, &stats);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kIdealGainZero) throw;
      ++in.dropped;
      continue;
    }
    in.deltas.push_back(delta);
    in.signs.push_back(PreferenceSign(verdict));
  }
  in.unjudged = stats.unjudged;
  return in;
}

ThresholdCurve SweepCellInputs(const CellInputs& in, const MetricKind& kind,
                               const SweepGrid& grid,
                               const PirOptions& options) {
  if (in.deltas.empty()) {
    throw Error(ErrorCode::kNoPreferences,
                "no preference-bearing query left for " +
                    std::string(kind.name()));
  }
  double max = 1.0;
  if (grid.threshold_max) {
    max = *grid.threshold_max;
  } else if (!kind.unit_range()) {
    max = kernels::MaxAbs(in.deltas);
  }
  ThresholdCurve curve;
  for (double t : GridThresholds(grid.threshold_step, max)) {
    const auto counts = kernels::CountTerms(in.deltas, in.signs, t);
    curve.push_back(
        {t, RatioFromCounts(counts, in.deltas.size(), in.ties, options)});
  }
  return curve;
}

}  // namespace

double Pir(const std::map<std::string, double>& deltas,
           const PreferenceMap& prefs, double threshold,
           const PirOptions& options) {
  CheckThreshold(threshold);
  std::vector<double> values;
  std::vector<double> signs;
  std::size_t ties = 0;
  for (const auto& [query, verdict] : prefs) {
    if (verdict == Verdict::kTie) {
      ++ties;
      continue;
    }
    const auto it = deltas.find(query);
    if (it == deltas.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "no metric delta for preference query " + query);
    }
    values.push_back(it->second);
    signs.push_back(PreferenceSign(verdict));
  }
  if (values.empty()) {
    throw Error(ErrorCode::kNoPreferences,
                "no query carries a FIRST or SECOND verdict");
  }
  return RatioFromCounts(kernels::CountTerms(values, signs, threshold),
                         values.size(), ties, options);
}

std::vector<double> GridThresholds(double step, double max) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw Error(ErrorCode::kInvalidArgument,
                "threshold step must be > 0, got " + std::to_string(step));
  }
  if (!(max >= 0.0) || !std::isfinite(max)) {
    throw Error(ErrorCode::kInvalidArgument,
                "threshold max must be >= 0, got " + std::to_string(max));
  }
  const auto count = static_cast<std::size_t>(std::floor(max / step + 1e-9));
  std::vector<double> out;
  out.reserve(count + 1);
  for (std::size_t i = 0; i <= count; ++i) {
    const double raw = static_cast<double>(i) * step;
    out.push_back(std::round(raw * 1e12) / 1e12);
  }
  return out;
}

ThresholdCurve ThresholdSweep(const std::vector<ListPair>& pairs,
                              const JudgmentSet& judgments,
                              const PreferenceMap& prefs,
                              const MetricKind& kind, Cutoff k,
                              const SweepGrid& grid,
                              const PirOptions& options) {
  const auto in = BuildCellInputs(pairs, judgments, prefs, kind, k);
  return SweepCellInputs(in, kind, grid, options);
}

ThresholdPoint BestThreshold(const ThresholdCurve& curve) {
  if (curve.empty()) {
    throw Error(ErrorCode::kEmptySweep, "threshold sweep is empty");
  }
  ThresholdPoint best = curve.front();
  for (const auto& point : curve) {
    if (point.pir > best.pir ||
        (point.pir == best.pir && point.threshold < best.threshold)) {
      best = point;
    }
  }
  return best;
}

const SweepCell* SweepResult::Find(const MetricKind& metric,
                                   Cutoff cutoff) const {
  const auto it = cells.find(CellKey{metric, cutoff});
  return it == cells.end() ? nullptr : &it->second;
}

std::size_t SweepResult::CubeSize() const {
  std::size_t n = 0;
  for (const auto& [key, cell] : cells) n += cell.curve.size();
  return n;
}

SweepResult PirProfile(const std::vector<ListPair>& pairs,
                       const JudgmentSet& judgments,
                       const PreferenceMap& prefs, const SweepGrid& grid,
                       const PirOptions& options) {
  for (const auto& pair : pairs) RequirePreference(prefs, pair.query_id);
  GridThresholds(grid.threshold_step, 0.0);
  if (grid.threshold_max) {
    GridThresholds(grid.threshold_step, *grid.threshold_max);
  }

  SweepResult result;
  for (const auto& metric : grid.metrics) {
    for (const auto& cutoff : grid.cutoffs) {
      SweepCell cell(CellKey{metric, cutoff});
      try {
        const auto in =
            BuildCellInputs(pairs, judgments, prefs, metric, cutoff);
        cell.preferences = in.deltas.size();
        cell.ties = in.ties;
        cell.dropped = in.dropped;
        cell.unjudged = in.unjudged;
        cell.curve = SweepCellInputs(in, metric, grid, options);
        cell.best = BestThreshold(cell.curve);
      } catch (const Error& e) {
        cell.curve.clear();
        cell.best.reset();
        cell.error = e.what();
      }
      const CellKey key = cell.key;
      result.cells.insert_or_assign(key, std::move(cell));
    }
  }
  return result;
}

}  // namespace prefeval
