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

#include "duality/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace duality {

std::size_t worker_count() {
  const std::size_t hardware = std::max(1U, std::thread::hardware_concurrency());
  const char* env = std::getenv("DUALITY_LAB_THREADS");
  if (env == nullptr) return hardware;
  const std::string_view text(env);
  std::size_t requested = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), requested);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || requested == 0) {
    return hardware;
  }
  return requested;
}

}  // namespace duality
