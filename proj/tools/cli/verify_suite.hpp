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

#ifndef DUALITY_CLI_VERIFY_SUITE_HPP
#define DUALITY_CLI_VERIFY_SUITE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "duality/state.hpp"

namespace duality::cli {

struct VerifyOptions {
  Index n_max = 8;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
};

/// One invariant evaluated at one path count. `worst` is the largest
/// observed violation measure; the check passes when worst <= limit (or
/// worst < limit for strict checks).
struct CheckResult {
  std::string module;
  std::string name;
  Index n = 0;
  std::uint64_t trials = 0;
  double worst = 0.0;
  double limit = 0.0;
  bool strict = false;
  bool passed = false;
};

/// Runs every invariant of the library over n = 2 .. n_max. Progress lines go
/// to `progress` when it is non-null.
std::vector<CheckResult> run_verify(const VerifyOptions& options, std::ostream* progress);

nlohmann::json to_json(const CheckResult& result);
std::string format_table(const std::vector<CheckResult>& results);

}  // namespace duality::cli

#endif  // DUALITY_CLI_VERIFY_SUITE_HPP
