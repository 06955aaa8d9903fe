// Copyright 2026 The duality-lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DUALITY_CLI_APP_HPP
#define DUALITY_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace duality::cli {

/// Process exit codes. No other values are ever returned.
enum ExitCode : int {
  kOk = 0,
  kInvalidState = 2,
  kParseFailure = 3,
  kFlagError = 4,
  kVerificationFailure = 5,
};

/// Runs the duality-lab command line. args[0] is the program name. Machine
/// readable output goes to `out`; diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace duality::cli

#endif  // DUALITY_CLI_APP_HPP
