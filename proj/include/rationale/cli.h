/*
 * Copyright 2026 The Rationale Eval Authors.
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

#ifndef RATIONALE_CLI_H_
#define RATIONALE_CLI_H_

// Command-line frontend. Exit codes: 0 success, 1 validation or property
// failures, 2 I/O or configuration errors, 3 oracle backend unavailable.

#include <iosfwd>
#include <string>
#include <vector>

namespace rationale {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitIoError = 2;
inline constexpr int kExitOracleUnavailable = 3;

// args excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace rationale

#endif  // RATIONALE_CLI_H_
