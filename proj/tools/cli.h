// Copyright 2026 The qindep Authors
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

#ifndef QINDEP_TOOLS_CLI_H
#define QINDEP_TOOLS_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace qindep::cli {

/// Stable process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitInputError = 2,
    kExitResourceGuard = 3,
    kExitInternalError = 4,
};

/// Entry point shared by the binary and the tests. args excludes argv[0].
/// Reports go to `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qindep::cli

#endif
