// Copyright 2026 The graphdiag Authors
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

#ifndef GRAPHDIAG_TOOLS_CLI_H
#define GRAPHDIAG_TOOLS_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace graphdiag {

/// Exit codes of the command line tool.
constexpr int EXIT_OK = 0;
constexpr int EXIT_ERROR = 1;
constexpr int EXIT_ENTANGLED = 2;

/// Runs the tool on `args` (without the program name), writing results to
/// `out` (unless --output names a file) and diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace graphdiag

#endif
