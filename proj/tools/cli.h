// Copyright 2026 The Cagelift Authors
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

#ifndef CAGELIFT_TOOLS_CLI_H_
#define CAGELIFT_TOOLS_CLI_H_

#include <iosfwd>

namespace cagelift::cli {

// Runs the command line. Output goes to `out` unless --output names a file;
// diagnostics go to `err`. Returns the process exit code.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace cagelift::cli

#endif  // CAGELIFT_TOOLS_CLI_H_
