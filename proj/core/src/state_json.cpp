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

#include "duality/state_json.hpp"

#include <fstream>
#include <sstream>

namespace duality {

using nlohmann::json;

namespace {

json complex_to_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

std::complex<double> complex_from_json(const json& v, std::string_view where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw ParseError(std::string(where) + ": expected [re, im] pair of numbers");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

Index declared_paths(const json& doc) {
  if (!doc.is_object()) throw ParseError("state document must be a JSON object");
  const auto it = doc.find("n");
  if (it == doc.end() || !it->is_number_integer()) {
    throw ParseError("state document needs an integer \"n\"");
  }
  return it->get<Index>();
}

ComplexVector parse_amplitudes(const json& doc, Index n) {
  const json& amps = doc.at("amplitudes");
  if (!amps.is_array() || static_cast<Index>(amps.size()) != n) {
    throw ParseError("\"amplitudes\" must be an array of n [re, im] pairs");
  }
  ComplexVector c(n);
  for (Index j = 0; j < n; ++j) c(j) = complex_from_json(amps[static_cast<std::size_t>(j)], "amplitudes");
  return c;
}

}  // namespace

json to_json(const QuantonState& state) {
  const Index n = state.paths();
  json rows = json::array();
  for (Index j = 0; j < n; ++j) {
    json row = json::array();
    for (Index k = 0; k < n; ++k) row.push_back(complex_to_json(state(j, k)));
    rows.push_back(std::move(row));
  }
  return json{{"n", n}, {"rho", std::move(rows)}};
}

json to_json(const PureState& state) {
  json amps = json::array();
  for (Index j = 0; j < state.paths(); ++j) amps.push_back(complex_to_json(state.amplitudes()(j)));
  return json{{"n", state.paths()}, {"amplitudes", std::move(amps)}};
}

json to_json(const ValidationReport& r) {
  return json{{"n", r.n},
              {"hermitian_defect", r.hermitian_defect},
              {"trace_defect", r.trace_defect},
              {"min_eigenvalue", r.min_eigenvalue},
              {"verdict", r.passed ? "pass" : "fail"},
              {"reason", r.reason}};
}

ComplexMatrix parse_matrix(const json& doc) {
  const Index n = declared_paths(doc);
  const bool has_rho = doc.contains("rho");
  const bool has_amps = doc.contains("amplitudes");
  if (has_rho && has_amps) throw ParseError("state document has both \"rho\" and \"amplitudes\"");
  if (!has_rho && !has_amps) throw ParseError("state document needs \"rho\" or \"amplitudes\"");
  if (n < 0) throw ParseError("\"n\" must be non-negative");

  if (has_amps) {
    const ComplexVector c = parse_amplitudes(doc, n);
    return c * c.adjoint();
  }
  const json& rows = doc.at("rho");
  if (!rows.is_array() || static_cast<Index>(rows.size()) != n) {
    throw ParseError("\"rho\" must have n rows");
  }
  ComplexMatrix m(n, n);
  for (Index j = 0; j < n; ++j) {
    const json& row = rows[static_cast<std::size_t>(j)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n) {
      throw ParseError("row " + std::to_string(j + 1) + " of \"rho\" must have n entries");
    }
    for (Index k = 0; k < n; ++k) m(j, k) = complex_from_json(row[static_cast<std::size_t>(k)], "rho");
  }
  return m;
}

ParsedState parse_state(const json& doc, StateOptions options) {
  const ComplexMatrix raw = parse_matrix(doc);  // shape checks
  if (doc.contains("amplitudes")) {
    PureState pure(parse_amplitudes(doc, raw.rows()), options);
    return ParsedState{from_pure(pure), std::move(pure)};
  }
  return ParsedState{QuantonState(raw, options), std::nullopt};
}

ParsedState parse_state(std::string_view text, StateOptions options) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_state(doc, options);
}

ParsedState read_state_file(const std::filesystem::path& path, StateOptions options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open state file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state(std::string_view(buf.str()), options);
}

}  // namespace duality
