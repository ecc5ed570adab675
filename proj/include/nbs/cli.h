// Copyright 2026 The nbsroyalty Authors.
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

#ifndef NBS_CLI_H_
#define NBS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace nbs {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNoDeal = 2;
inline constexpr int kExitInvalidArguments = 3;
inline constexpr int kExitModelError = 4;

// Runs the tool with `args` (without the program name). Data goes to `out`,
// diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nbs

#endif  // NBS_CLI_H_
