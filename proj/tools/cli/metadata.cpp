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

#include "cli/metadata.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>

#include <fmt/format.h>

#include "duality/ensembles.hpp"
#include "duality/measures.hpp"
#include "duality/state.hpp"

namespace duality::cli {

const char* tool_version() { return DUALITY_VERSION; }

std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    char* end = nullptr;
    const long long value = std::strtoll(epoch, &end, 10);
    if (end != epoch && *end == '\0') now = static_cast<std::time_t>(value);
  }
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

RunMetadata make_metadata(const std::vector<std::string>& args, std::vector<std::uint64_t> seeds) {
  RunMetadata m;
  m.tool_version = tool_version();
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i != 0) m.command_line += ' ';
    m.command_line += args[i];
  }
  m.seeds = std::move(seeds);
  m.generator = std::string(kGeneratorIdentity);
  m.timestamp = utc_timestamp();
  const Tolerances tol;
  m.tolerances = {{"hermitian", tol.hermitian},
                  {"trace", tol.trace},
                  {"psd_per_path", tol.psd_per_path},
                  {"duality_residual", 1e-12},
                  {"identity_form", kIdentityTolerance},
                  {"fringe_grid", 1e-3}};
  return m;
}

nlohmann::json RunMetadata::to_json() const {
  return {{"tool", "duality-lab"},
          {"tool_version", tool_version},
          {"command_line", command_line},
          {"seeds", seeds},
          {"generator", generator},
          {"timestamp", timestamp},
          {"tolerances", tolerances}};
}

std::string RunMetadata::to_csv_comments() const {
  std::string seed_text;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (i != 0) seed_text += ' ';
    seed_text += std::to_string(seeds[i]);
  }
  return fmt::format(
      "# tool: duality-lab {}\n# command_line: {}\n# seeds: {}\n# generator: {}\n"
      "# timestamp: {}\n# tolerances: {}\n",
      tool_version, command_line, seed_text.empty() ? "none" : seed_text, generator, timestamp,
      tolerances.dump());
}

}  // namespace duality::cli
