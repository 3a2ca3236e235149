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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "prefeval/error.hpp"
#include "prefeval/metrics.hpp"

namespace prefeval {

namespace {

// std:: distributions are implementation-defined, so the transforms below
// are spelled out.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Box-Muller; one draw per call.
  double Gaussian() {
    const double u1 = 1.0 - Uniform();
    const double u2 = Uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  // Kumaraswamy(a, b) by inverse CDF.
  double Kumaraswamy(double a, double b) {
    const double u = Uniform();
    return std::pow(1.0 - std::pow(1.0 - u, 1.0 / b), 1.0 / a);
  }

  // Uniform on [0, n) by rejection.
  std::uint64_t Below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % n;
  }

 private:
  std::mt19937_64 engine_;
};

double QuantizeToLattice(double value) {
  const double clamped = std::clamp(value, 0.0, 1.0);
  return static_cast<double>(std::lround(clamped * 5.0)) / 5.0;
}

std::string PaddedId(char prefix, int index, int count) {
  const std::string digits = std::to_string(index);
  const std::size_t width = std::to_string(count).size();
  return std::string(1, prefix) +
         std::string(width - std::min(width, digits.size()), '0') + digits;
}

}  // namespace

void ValidateSimConfig(const SimConfig& config) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidArgument, "simulation config: " + what);
  };
  if (config.num_queries < 1) fail("num_queries must be >= 1");
  if (config.docs_per_query < 1) fail("docs_per_query must be >= 1");
  if (config.persistence_depth < 1) fail("persistence_depth must be >= 1");
  if (!(config.grade_noise >= 0.0)) fail("grade_noise must be >= 0");
  if (!(config.engine_noise >= 0.0)) fail("engine_noise must be >= 0");
  if (!(config.tie_margin >= 0.0)) fail("tie_margin must be >= 0");
  if (!(config.relevance_a > 0.0) || !(config.relevance_b > 0.0)) {
    fail("relevance shape parameters must be > 0");
  }
}

SimulatedStudy GenerateStudy(const SimConfig& config) {
  ValidateSimConfig(config);
  Stream rng(config.seed);
  SimulatedStudy study;
  JudgmentSet perceived;
  const auto n = static_cast<std::size_t>(config.docs_per_query);
  const Cutoff depth(config.persistence_depth);

  for (int q = 1; q <= config.num_queries; ++q) {
    const std::string query = PaddedId('q', q, config.num_queries);
    std::vector<std::string> docs(n);
    std::vector<double> relevance(n);
    std::vector<double> score(n);
    for (std::size_t d = 0; d < n; ++d) {
      docs[d] = PaddedId('d', static_cast<int>(d) + 1, config.docs_per_query);
      relevance[d] =
          rng.Kumaraswamy(config.relevance_a, config.relevance_b);
    }
    for (std::size_t d = 0; d < n; ++d) {
      score[d] = relevance[d] + config.engine_noise * rng.Gaussian();
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return score[a] > score[b];
                     });
    RankedList original{query, "original", {}};
    for (std::size_t d : order) original.docs.push_back(docs[d]);

    std::vector<std::size_t> shuffled(n);
    std::iota(shuffled.begin(), shuffled.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) {
      std::swap(shuffled[i - 1], shuffled[rng.Below(i)]);
    }
    RankedList randomized{query, "randomized", {}};
    for (std::size_t d : shuffled) randomized.docs.push_back(docs[d]);

    auto& truth_rel = study.truth.relevance[query];
    for (std::size_t d = 0; d < n; ++d) {
      const double noisy = relevance[d] + config.grade_noise * rng.Gaussian();
      study.bundle.judgments.Add(query, docs[d],
                                 RelevanceGrade(QuantizeToLattice(noisy)));
      perceived.Add(query, docs[d],
                    RelevanceGrade(QuantizeToLattice(relevance[d])));
      truth_rel[docs[d]] = relevance[d];
    }

    ListPair pair = MakeListPair(std::move(original), std::move(randomized));
    Verdict verdict = Verdict::kTie;
    try {
      const double delta = MetricDelta(pair, perceived, config.utility, depth);
      study.truth.utility_delta[query] = delta;
      if (delta != 0.0 && std::fabs(delta) >= config.tie_margin) {
        verdict = delta > 0.0 ? Verdict::kFirst : Verdict::kSecond;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kIdealGainZero) throw;
    }
    study.truth.preferences[query] = verdict;
    study.bundle.prefs[query] = verdict;
    study.bundle.pairs.push_back(std::move(pair));
  }
  return study;
}

double OraclePir(const std::map<std::string, double>& deltas,
                 const PreferenceMap& prefs, double threshold,
                 bool ties_in_denominator) {
  if (threshold < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "negative threshold");
  }
  double numerator = 0.0;
  long preferred = 0;
  long tied = 0;
  for (const auto& entry : prefs) {
    int p = 0;
    if (entry.second == Verdict::kFirst) {
      p = 1;
    } else if (entry.second == Verdict::kSecond) {
      p = -1;
    } else {
      ++tied;
      continue;
    }
    ++preferred;
    auto found = deltas.find(entry.first);
    if (found == deltas.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "oracle: missing delta for " + entry.first);
    }
    const double m = found->second;
    int sgn = 0;
    if (m > 0.0) sgn = 1;
    if (m < 0.0) sgn = -1;
    const double magnitude = m < 0.0 ? -m : m;
    if (magnitude >= threshold) numerator += sgn * p;
  }
  if (preferred == 0) {
    throw Error(ErrorCode::kNoPreferences, "oracle: no preferences");
  }
  const long denominator = preferred + (ties_in_denominator ? tied : 0);
  return numerator / static_cast<double>(denominator);
}

}  // namespace prefeval
