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

#ifndef DUALITY_STATE_JSON_HPP
#define DUALITY_STATE_JSON_HPP

#include <filesystem>
#include <optional>
#include <string_view>

#include <nlohmann/json.hpp>

#include "duality/state.hpp"

namespace duality {

// State documents:
//   mixed: {"n": 2, "rho": [[[re, im], [re, im]], [[re, im], [re, im]]]}
//   pure:  {"n": 2, "amplitudes": [[re, im], [re, im]]}
// Exactly one of "rho" / "amplitudes" must be present. Rows and columns are
// path 1..n in order.

nlohmann::json to_json(const QuantonState& state);
nlohmann::json to_json(const PureState& state);
nlohmann::json to_json(const ValidationReport& report);

struct ParsedState {
  QuantonState density;
  std::optional<PureState> pure;  // set when the document held amplitudes
};

/// Throws ParseError for malformed documents, and the state constructors'
/// errors (DimensionError, NormalizationError, ValidationError) for
/// well-formed documents describing an invalid state.
ParsedState parse_state(const nlohmann::json& doc, StateOptions options = {});
ParsedState parse_state(std::string_view text, StateOptions options = {});
ParsedState read_state_file(const std::filesystem::path& path, StateOptions options = {});

/// Raw matrix from a document without validating it (used to report on
/// rejected inputs).
ComplexMatrix parse_matrix(const nlohmann::json& doc);

}  // namespace duality

#endif  // DUALITY_STATE_JSON_HPP
