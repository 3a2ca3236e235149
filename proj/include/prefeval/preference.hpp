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

// Preference Identification Ratio (PIR) and the threshold / cutoff sweep.
//
// For the queries Q whose verdict is FIRST or SECOND,
//
//   PIR = sum_{q in Q} [ |d_q| >= t ? sgn(d_q) * p_q : 0 ] / |Q|
//
// where d_q is the metric difference first - second and p_q is +1 for FIRST
// and -1 for SECOND. TIE queries sit outside Q unless
// PirOptions::ties_in_denominator is set, in which case they only enlarge
// the denominator.

#ifndef PREFEVAL_PREFERENCE_HPP_
#define PREFEVAL_PREFERENCE_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prefeval/metrics.hpp"
#include "prefeval/types.hpp"

namespace prefeval {

enum class Verdict { kFirst, kSecond, kTie };

std::string_view VerdictName(Verdict verdict);
// Throws Error(kParseError) for anything but FIRST, SECOND or TIE.
Verdict ParseVerdict(std::string_view text);

using PreferenceMap = std::map<std::string, Verdict, std::less<>>;

struct ListPair {
  std::string query_id;
  RankedList first;
  RankedList second;

  friend bool operator==(const ListPair&, const ListPair&) = default;
};

// Validates both lists, the shared query id and distinct list ids.
ListPair MakeListPair(RankedList first, RankedList second);

struct PirOptions {
  // Count TIE-verdict queries in the denominator.
  bool ties_in_denominator = false;
};

// metric(first) - metric(second) with the candidate pool set to the union
// of both lists. Propagates Error(kIdealGainZero).
double MetricDelta(const ListPair& pair, const JudgmentSet& judgments,
                   const MetricKind& kind, Cutoff k,
                   EvalStats* stats = nullptr);

// Throws Error(kNoPreferences) when no query has a FIRST/SECOND verdict and
// Error(kInvalidArgument) when such a query lacks a delta or t < 0.
double Pir(const std::map<std::string, double>& deltas,
           const PreferenceMap& prefs, double threshold,
           const PirOptions& options = {});

struct SweepGrid {
  std::vector<MetricKind> metrics;
  std::vector<Cutoff> cutoffs;
  double threshold_step = 0.01;
  // Unset: 1.0 for unit-range metrics, max |delta| of the cell otherwise.
  std::optional<double> threshold_max;
};

// {0, step, 2 step, ...} up to and including max, each snapped to the
// nearest double of its 12-digit decimal value.
std::vector<double> GridThresholds(double step, double max);

struct ThresholdPoint {
  double threshold = 0.0;
  double pir = 0.0;

  friend bool operator==(const ThresholdPoint&,
                         const ThresholdPoint&) = default;
};

// Ascending in threshold.
using ThresholdCurve = std::vector<ThresholdPoint>;

ThresholdCurve ThresholdSweep(const std::vector<ListPair>& pairs,
                              const JudgmentSet& judgments,
                              const PreferenceMap& prefs,
                              const MetricKind& kind, Cutoff k,
                              const SweepGrid& grid,
                              const PirOptions& options = {});

// Maximal PIR; among maximizers the smallest threshold.
// Throws Error(kEmptySweep) for an empty curve.
ThresholdPoint BestThreshold(const ThresholdCurve& curve);

struct CellKey {
  MetricKind metric;
  Cutoff cutoff;

  friend std::weak_ordering operator<=>(const CellKey& a, const CellKey& b) {
    if (auto c = a.metric <=> b.metric; c != 0) return c;
    return a.cutoff <=> b.cutoff;
  }
  friend bool operator==(const CellKey&, const CellKey&) = default;
};

struct SweepCell {
  explicit SweepCell(CellKey cell_key) : key(cell_key) {}

  CellKey key;
  ThresholdCurve curve;
  std::optional<ThresholdPoint> best;
  // |Q| after drops.
  std::size_t preferences = 0;
  std::size_t ties = 0;
  // Preference queries excluded because the metric was undefined for them.
  std::size_t dropped = 0;
  std::size_t unjudged = 0;
  // Empty unless the whole cell failed.
  std::string error;
};

struct SweepResult {
  std::map<CellKey, SweepCell> cells;

  const SweepCell* Find(const MetricKind& metric, Cutoff cutoff) const;
  // Total number of (metric, cutoff, threshold) entries.
  std::size_t CubeSize() const;
};

// Runs every (metric, cutoff) cell of the grid. A cell that fails records
// its error and leaves the other cells intact. Throws Error(kInvalidArgument)
// when a pair has no preference record.
SweepResult PirProfile(const std::vector<ListPair>& pairs,
                       const JudgmentSet& judgments,
                       const PreferenceMap& prefs, const SweepGrid& grid,
                       const PirOptions& options = {});

}  // namespace prefeval

#endif  // PREFEVAL_PREFERENCE_HPP_
