// Copyright 2026 The PQCWC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PQCWC_CLI_CLI_H_
#define PQCWC_CLI_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace pqcwc::cli {

// Process exit statuses.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,    // verify: well-formed but wrong signature
  kExitMalformed = 2,  // malformed input or bad arguments
  kExitIo = 3,
  kExitProtocol = 4,
};

// Runs one `pqcwc` command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace pqcwc::cli

#endif  // PQCWC_CLI_CLI_H_
