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

// Data-parallel kernels behind the threshold sweep.
//
// Each kernel has a portable scalar reference and vector variants (AVX2 on
// x86-64, NEON on AArch64) selected at runtime. All kernels are exact: they
// only compare, count and take maxima, so every variant returns bit-identical
// results to the scalar reference.

#ifndef PREFEVAL_KERNELS_TERM_COUNT_HPP_
#define PREFEVAL_KERNELS_TERM_COUNT_HPP_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace prefeval::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view IsaName(Isa isa);

// True when the variant is compiled in and the running CPU supports it.
bool IsaAvailable(Isa isa);

// The variant used by the dispatching entry points. Honors the
// PREFEVAL_FORCE_SCALAR environment variable.
Isa ActiveIsa();

// Variants compiled in and supported here, scalar first.
std::vector<Isa> AvailableIsas();

// Tally of the nonzero terms sgn(delta) * sign over entries with
// |delta| >= threshold. `signs` must hold +1.0 or -1.0.
struct TermCounts {
  std::int64_t agree = 0;
  std::int64_t disagree = 0;

  std::int64_t support() const { return agree + disagree; }
  std::int64_t net() const { return agree - disagree; }

  friend bool operator==(const TermCounts&, const TermCounts&) = default;
};

TermCounts CountTerms(std::span<const double> deltas,
                      std::span<const double> signs, double threshold);
TermCounts CountTerms(Isa isa, std::span<const double> deltas,
                      std::span<const double> signs, double threshold);

// max |x|, 0 for an empty span.
double MaxAbs(std::span<const double> values);
double MaxAbs(Isa isa, std::span<const double> values);

}  // namespace prefeval::kernels

#endif  // PREFEVAL_KERNELS_TERM_COUNT_HPP_
