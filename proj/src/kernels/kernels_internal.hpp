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

// Per-ISA entry points. Raw pointer interfaces keep the vector translation
// units free of standard library templates compiled with different flags.

#ifndef PREFEVAL_SRC_KERNELS_KERNELS_INTERNAL_HPP_
#define PREFEVAL_SRC_KERNELS_KERNELS_INTERNAL_HPP_

#include <cstddef>
#include <cstdint>

namespace prefeval::kernels::detail {

struct RawCounts {
  std::int64_t agree;
  std::int64_t disagree;
};

RawCounts CountTermsScalar(const double* deltas, const double* signs,
                           std::size_t n, double threshold);
double MaxAbsScalar(const double* values, std::size_t n);

#if defined(PREFEVAL_HAVE_AVX2)
RawCounts CountTermsAvx2(const double* deltas, const double* signs,
                         std::size_t n, double threshold);
double MaxAbsAvx2(const double* values, std::size_t n);
#endif

#if defined(PREFEVAL_HAVE_NEON)
RawCounts CountTermsNeon(const double* deltas, const double* signs,
                         std::size_t n, double threshold);
double MaxAbsNeon(const double* values, std::size_t n);
#endif

}  // namespace prefeval::kernels::detail

#endif  // PREFEVAL_SRC_KERNELS_KERNELS_INTERNAL_HPP_
