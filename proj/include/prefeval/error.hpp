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

#ifndef PREFEVAL_ERROR_HPP_
#define PREFEVAL_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace prefeval {

enum class ErrorCode {
  kInvalidArgument,
  // Every candidate grade is zero, so no normalizer exists.
  kIdealGainZero,
  kEmptyQuerySet,
  // No query carries a FIRST/SECOND verdict; PIR is undefined.
  kNoPreferences,
  kEmptySweep,
  kOutOfScale,
  kParseError,
  kDuplicateJudgment,
  kRankGap,
  kDuplicateRank,
  kDuplicateDoc,
  kDuplicatePreference,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// Single exception type for the library. `line()` is 1-based and 0 when the
// error is not tied to an input line.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0);

  ErrorCode code() const { return code_; }
  std::size_t line() const { return line_; }

 private:
  ErrorCode code_;
  std::size_t line_;
};

}  // namespace prefeval

#endif  // PREFEVAL_ERROR_HPP_
