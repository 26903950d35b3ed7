// Copyright 2026 The gcelab Authors
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

#ifndef GCELAB_TOOLS_CLI_HPP
#define GCELAB_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gcelab::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kUnsupportedOrder = 2,
  kResourceLimit = 3,
};

/// Runs the `gcelab` command line. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Integers from a comma list ("2,3,5") or a range "start:stop[:step]" with
/// stop exclusive. Throws std::invalid_argument.
std::vector<int> parse_int_list(const std::string& text);
/// Same for reals; ranges use start + i*step for every value below stop.
std::vector<double> parse_real_list(const std::string& text);

}  // namespace gcelab::cli

#endif  // GCELAB_TOOLS_CLI_HPP
