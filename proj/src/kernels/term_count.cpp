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

#include "prefeval/kernels/term_count.hpp"

#include <cstdlib>

#include "kernels_internal.hpp"
#include "prefeval/error.hpp"

namespace prefeval::kernels {

std::string_view IsaName(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
    case Isa::kNeon:
      return "neon";
  }
  return "unknown";
}

bool IsaAvailable(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(PREFEVAL_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(PREFEVAL_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

namespace {

Isa DetectIsa() {
  if (const char* force = std::getenv("PREFEVAL_FORCE_SCALAR");
      force != nullptr && *force != '\0' && *force != '0') {
    return Isa::kScalar;
  }
  if (IsaAvailable(Isa::kAvx2)) return Isa::kAvx2;
  if (IsaAvailable(Isa::kNeon)) return Isa::kNeon;
  return Isa::kScalar;
}

void CheckSizes(std::span<const double> deltas, std::span<const double> signs) {
  if (deltas.size() != signs.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "delta and sign spans differ in length");
  }
}

}  // namespace

Isa ActiveIsa() {
  static const Isa isa = DetectIsa();
  return isa;
}

std::vector<Isa> AvailableIsas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
    if (IsaAvailable(isa)) out.push_back(isa);
  }
  return out;
}

TermCounts CountTerms(Isa isa, std::span<const double> deltas,
                      std::span<const double> signs, double threshold) {
  CheckSizes(deltas, signs);
  detail::RawCounts raw{0, 0};
  switch (isa) {
#if defined(PREFEVAL_HAVE_AVX2)
    case Isa::kAvx2:
      if (IsaAvailable(isa)) {
        raw = detail::CountTermsAvx2(deltas.data(), signs.data(),
                                     deltas.size(), threshold);
        return {raw.agree, raw.disagree};
      }
      break;
#endif
#if defined(PREFEVAL_HAVE_NEON)
    case Isa::kNeon:
      raw = detail::CountTermsNeon(deltas.data(), signs.data(), deltas.size(),
                                   threshold);
      return {raw.agree, raw.disagree};
#endif
    default:
      break;
  }
  if (isa != Isa::kScalar) {
    throw Error(ErrorCode::kInvalidArgument,
                "kernel variant " + std::string(IsaName(isa)) +
                    " is not available");
  }
  raw = detail::CountTermsScalar(deltas.data(), signs.data(), deltas.size(),
                                 threshold);
  return {raw.agree, raw.disagree};
}

TermCounts CountTerms(std::span<const double> deltas,
                      std::span<const double> signs, double threshold) {
  return CountTerms(ActiveIsa(), deltas, signs, threshold);
}

double MaxAbs(Isa isa, std::span<const double> values) {
  switch (isa) {
#if defined(PREFEVAL_HAVE_AVX2)
    case Isa::kAvx2:
      if (IsaAvailable(isa)) {
        return detail::MaxAbsAvx2(values.data(), values.size());
      }
      break;
#endif
#if defined(PREFEVAL_HAVE_NEON)
    case Isa::kNeon:
      return detail::MaxAbsNeon(values.data(), values.size());
#endif
    default:
      break;
  }
  if (isa != Isa::kScalar) {
    throw Error(ErrorCode::kInvalidArgument,
                "kernel variant " + std::string(IsaName(isa)) +
                    " is not available");
  }
  return detail::MaxAbsScalar(values.data(), values.size());
}

double MaxAbs(std::span<const double> values) {
  return MaxAbs(ActiveIsa(), values);
}

}  // namespace prefeval::kernels
