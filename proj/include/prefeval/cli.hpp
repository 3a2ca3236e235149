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

// Command-line front end: `metrics`, `pir`, `sweep` and `simulate`.
//
// Exit codes: 0 success, 1 usage error, 2 data error (I/O, parse or
// invariant violation). Diagnostics are one line on `err`.

#ifndef PREFEVAL_CLI_HPP_
#define PREFEVAL_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "prefeval/types.hpp"

namespace prefeval::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Parses "1-10", "3", "1,3,5" and mixtures such as "1-5,8". The result is
// sorted and de-duplicated. Throws Error(kInvalidArgument).
std::vector<Cutoff> ParseCutoffList(const std::string& text);

// Comma-separated metric names. Throws Error(kInvalidArgument).
std::vector<MetricKind> ParseMetricList(const std::string& text,
                                        double log_base);

// `args[0]` is the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace prefeval::cli

#endif  // PREFEVAL_CLI_HPP_
