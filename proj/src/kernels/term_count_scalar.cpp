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

#include <cmath>

#include "kernels_internal.hpp"

namespace prefeval::kernels::detail {

RawCounts CountTermsScalar(const double* deltas, const double* signs,
                           std::size_t n, double threshold) {
  RawCounts counts{0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    if (!(std::fabs(deltas[i]) >= threshold)) continue;
    const double product = deltas[i] * signs[i];
    if (product > 0.0) {
      ++counts.agree;
    } else if (product < 0.0) {
      ++counts.disagree;
    }
  }
  return counts;
}

double MaxAbsScalar(const double* values, std::size_t n) {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = std::fabs(values[i]);
    if (a > best) best = a;
  }
  return best;
}

}  // namespace prefeval::kernels::detail
