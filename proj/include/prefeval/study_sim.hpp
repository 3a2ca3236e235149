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

// Seeded synthetic studies: per query an "original" list ranked by a noisy
// engine score and a uniformly shuffled "randomized" list, graded by a noisy
// rater on the six-point lattice, with a simulated side-by-side preference.
//
// All distributions are built on mt19937_64 bits with hand-written
// transforms, so a seed reproduces the same study on every platform.
//
// Also hosts OraclePir, a term-by-term evaluation of the preference
// identification ratio used only to cross-check preference_eval.

#ifndef PREFEVAL_STUDY_SIM_HPP_
#define PREFEVAL_STUDY_SIM_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "prefeval/data_io.hpp"
#include "prefeval/preference.hpp"
#include "prefeval/types.hpp"

namespace prefeval {

inline constexpr std::string_view kSimulatorPrng = "mt19937_64";

struct SimConfig {
  std::uint64_t seed = 1;
  int num_queries = 31;
  int docs_per_query = 50;
  // Std-dev of the rater's Gaussian perturbation before quantization.
  double grade_noise = 0.0;
  // Std-dev of the engine score noise around true relevance.
  double engine_noise = 0.5;
  // Ranks the simulated user looks at when forming a preference.
  int persistence_depth = 10;
  // Utility differences below this are answered with TIE.
  double tie_margin = 0.0;
  // Utility the simulated user maximizes over persistence_depth ranks.
  MetricKind utility = MetricKind::CumulatedGain();
  // Kumaraswamy(a, b) shape of the true relevance prior. a = 1, b = 3 puts
  // most mass near 0.
  double relevance_a = 1.0;
  double relevance_b = 3.0;
};

// Throws Error(kInvalidArgument) for non-positive counts, negative noise or
// margin, and non-positive shape parameters.
void ValidateSimConfig(const SimConfig& config);

struct GroundTruth {
  // Latent relevance in [0, 1] per (query, doc).
  std::map<std::string, std::map<std::string, double>> relevance;
  // utility(first) - utility(second), computed on the quantized latent
  // relevance. Absent when the utility is undefined for the query.
  std::map<std::string, double> utility_delta;
  PreferenceMap preferences;
};

struct SimulatedStudy {
  StudyBundle bundle;
  GroundTruth truth;
};

SimulatedStudy GenerateStudy(const SimConfig& config);

// Independent re-derivation of the preference identification ratio, used as
// a test oracle. Same contract and errors as Pir.
double OraclePir(const std::map<std::string, double>& deltas,
                 const PreferenceMap& prefs, double threshold,
                 bool ties_in_denominator = false);

}  // namespace prefeval

#endif  // PREFEVAL_STUDY_SIM_HPP_
