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

#ifndef DUALITY_CLI_METADATA_HPP
#define DUALITY_CLI_METADATA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace duality::cli {

/// Run record attached to every output: JSON documents carry it under
/// "metadata", CSV files as leading "# key: value" comment lines.
struct RunMetadata {
  std::string tool_version;
  std::string command_line;
  std::vector<std::uint64_t> seeds;
  std::string generator;
  std::string timestamp;  // UTC, ISO 8601
  nlohmann::json tolerances;

  nlohmann::json to_json() const;
  std::string to_csv_comments() const;
};

RunMetadata make_metadata(const std::vector<std::string>& args, std::vector<std::uint64_t> seeds);

/// SOURCE_DATE_EPOCH when set, otherwise the current time.
std::string utc_timestamp();

const char* tool_version();

}  // namespace duality::cli

#endif  // DUALITY_CLI_METADATA_HPP
