// Copyright 2026 The conefree Authors
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

#ifndef CONEFREE_CLI_H_
#define CONEFREE_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace conefree::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMaxIters = 2;
inline constexpr int kExitDiverged = 3;

// Subcommands: solve, generate, bench. `args` excludes the program name.
// Never throws; errors are reported on `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace conefree::cli

#endif  // CONEFREE_CLI_H_
