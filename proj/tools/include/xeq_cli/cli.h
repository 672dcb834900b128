// Copyright 2026 The xeq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Entry point of the xeq command-line tool, callable in-process.
//
// Exit codes: 0 success (check: In; extend: Feasible), 1 check Out or extend
// Infeasible, 2 usage or parse error, 3 budget exceeded, 4 check
// Inconclusive, 5 internal error.

#ifndef XEQ_CLI_CLI_H_
#define XEQ_CLI_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace xeq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInconclusive = 4;
inline constexpr int kExitInternal = 5;

inline constexpr int kSchemaVersion = 1;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xeq::cli

#endif  // XEQ_CLI_CLI_H_
