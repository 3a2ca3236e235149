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

// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <cmath>

#include "kernels_internal.hpp"

namespace prefeval::kernels::detail {

RawCounts CountTermsAvx2(const double* deltas, const double* signs,
                         std::size_t n, double threshold) {
  const __m256d sign_bit = _mm256_set1_pd(-0.0);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d t = _mm256_set1_pd(threshold);

  std::int64_t agree = 0;
  std::int64_t disagree = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_loadu_pd(deltas + i);
    const __m256d s = _mm256_loadu_pd(signs + i);
    const __m256d kept =
        _mm256_cmp_pd(_mm256_andnot_pd(sign_bit, d), t, _CMP_GE_OQ);
    const __m256d product = _mm256_mul_pd(d, s);
    const __m256d pos = _mm256_cmp_pd(product, zero, _CMP_GT_OQ);
    const __m256d neg = _mm256_cmp_pd(product, zero, _CMP_LT_OQ);
    agree += __builtin_popcount(_mm256_movemask_pd(_mm256_and_pd(kept, pos)));
    disagree +=
        __builtin_popcount(_mm256_movemask_pd(_mm256_and_pd(kept, neg)));
  }
  const RawCounts tail =
      CountTermsScalar(deltas + i, signs + i, n - i, threshold);
  return {agree + tail.agree, disagree + tail.disagree};
}

double MaxAbsAvx2(const double* values, std::size_t n) {
  const __m256d sign_bit = _mm256_set1_pd(-0.0);
  __m256d best = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_andnot_pd(sign_bit, _mm256_loadu_pd(values + i));
    best = _mm256_max_pd(best, a);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double result = MaxAbsScalar(values + i, n - i);
  for (double lane : lanes) {
    if (lane > result) result = lane;
  }
  return result;
}

}  // namespace prefeval::kernels::detail
