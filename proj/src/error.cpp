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

#include "prefeval/error.hpp"

namespace prefeval {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kIdealGainZero:
      return "IdealGainZero";
    case ErrorCode::kEmptyQuerySet:
      return "EmptyQuerySet";
    case ErrorCode::kNoPreferences:
      return "NoPreferences";
    case ErrorCode::kEmptySweep:
      return "EmptySweep";
    case ErrorCode::kOutOfScale:
      return "OutOfScale";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kDuplicateJudgment:
      return "DuplicateJudgment";
    case ErrorCode::kRankGap:
      return "RankGap";
    case ErrorCode::kDuplicateRank:
      return "DuplicateRank";
    case ErrorCode::kDuplicateDoc:
      return "DuplicateDoc";
    case ErrorCode::kDuplicatePreference:
      return "DuplicatePreference";
    case ErrorCode::kIo:
      return "Io";
  }
  return "Unknown";
}

namespace {

std::string Decorate(ErrorCode code, const std::string& message,
                     std::size_t line) {
  std::string out(ErrorCodeName(code));
  if (line > 0) {
    out += " at line ";
    out += std::to_string(line);
  }
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::size_t line)
    : std::runtime_error(Decorate(code, message, line)),
      code_(code),
      line_(line) {}

}  // namespace prefeval
