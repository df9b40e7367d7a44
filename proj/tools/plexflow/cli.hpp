// Copyright 2026 The Plexflow Authors
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

#ifndef PLEXFLOW_TOOLS_CLI_HPP_
#define PLEXFLOW_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace plexflow::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFindings = 1,  // validation violations or audit errors
  kExitUsage = 2,
  kExitParse = 3,
};

// Runs one invocation. `args` excludes the program name. Results go to `out`
// (or to the files named by flags), diagnostics to `err` prefixed "error:" or
// "warning:".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plexflow::cli

#endif  // PLEXFLOW_TOOLS_CLI_HPP_
