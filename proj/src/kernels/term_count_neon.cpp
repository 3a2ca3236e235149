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

// AdvSIMD is part of the AArch64 baseline, so no runtime check is needed.

#include <arm_neon.h>

#include "kernels_internal.hpp"

namespace prefeval::kernels::detail {

RawCounts CountTermsNeon(const double* deltas, const double* signs,
                         std::size_t n, double threshold) {
  const float64x2_t t = vdupq_n_f64(threshold);
  uint64x2_t agree = vdupq_n_u64(0);
  uint64x2_t disagree = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t d = vld1q_f64(deltas + i);
    const float64x2_t s = vld1q_f64(signs + i);
    const uint64x2_t kept = vcgeq_f64(vabsq_f64(d), t);
    const float64x2_t product = vmulq_f64(d, s);
    const uint64x2_t pos = vandq_u64(kept, vcgtzq_f64(product));
    const uint64x2_t neg = vandq_u64(kept, vcltzq_f64(product));
    agree = vaddq_u64(agree, vshrq_n_u64(pos, 63));
    disagree = vaddq_u64(disagree, vshrq_n_u64(neg, 63));
  }
  const RawCounts tail =
      CountTermsScalar(deltas + i, signs + i, n - i, threshold);
  return {static_cast<std::int64_t>(vaddvq_u64(agree)) + tail.agree,
          static_cast<std::int64_t>(vaddvq_u64(disagree)) + tail.disagree};
}

double MaxAbsNeon(const double* values, std::size_t n) {
  float64x2_t best = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    best = vmaxq_f64(best, vabsq_f64(vld1q_f64(values + i)));
  }
  const double lanes = vmaxvq_f64(best);
  const double tail = MaxAbsScalar(values + i, n - i);
  return lanes > tail ? lanes : tail;
}

}  // namespace prefeval::kernels::detail
