// Copyright 2026 The pivotforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PIVOTFORGE__CLI_HPP_
#define PIVOTFORGE__CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace pivotforge
{

/// Exit codes of the command-line tool.
inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

}  // namespace pivotforge

#endif  // PIVOTFORGE__CLI_HPP_
