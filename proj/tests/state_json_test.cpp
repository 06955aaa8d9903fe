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

#include <gtest/gtest.h>

#include "duality/ensembles.hpp"

namespace duality {
namespace {

TEST(StateJson, MixedDocument) {
  const ParsedState p = parse_state(std::string_view(R"({"n": 2, "rho": [[[0.5, 0], [0.25, 0]], [[0.25, 0], [0.5, 0]]]})"));
  EXPECT_FALSE(p.pure.has_value());
  EXPECT_EQ(p.density.paths(), 2);
  EXPECT_EQ(p.density(0, 1), std::complex<double>(0.25, 0.0));
}

TEST(StateJson, PureDocument) {
  const ParsedState p = parse_state(std::string_view(R"({"n": 2, "amplitudes": [[0.6, 0], [0, 0.8]]})"));
  ASSERT_TRUE(p.pure.has_value());
  EXPECT_NEAR(p.density(0, 0).real(), 0.36, 1e-15);
  EXPECT_NEAR(p.density(0, 1).imag(), -0.48, 1e-15);
}

TEST(StateJson, StructuralErrors) {
  const char* bad[] = {
      R"({"n": 2})",
      R"({"rho": [[[1,0]]]})",
      R"({"n": 2.5, "amplitudes": [[1,0],[0,0]]})",
      R"({"n": 2, "amplitudes": [[1,0],[0,0]], "rho": [[[1,0],[0,0]],[[0,0],[0,0]]]})",
      R"({"n": 3, "amplitudes": [[1,0],[0,0]]})",
      R"({"n": 2, "amplitudes": [[1],[0,0]]})",
      R"({"n": 2, "rho": [[[1,0],[0,0]]]})",
      R"({"n": 2, "rho": [[[1,0],[0,0]],[[0,0]]]})",
      R"({"n": 2, "rho": [[[1,"x"],[0,0]],[[0,0],[0,0]]]})",
      R"([1, 2])",
      R"({"n": 2, "rho": )",
  };
  for (const char* text : bad) {
    EXPECT_THROW(parse_state(std::string_view(text)), ParseError) << text;
  }
}

TEST(StateJson, InvalidStatesAreNotParseErrors) {
  EXPECT_THROW(parse_state(std::string_view(R"({"n": 2, "rho": [[[0.5,0],[0.6,0]],[[0.6,0],[0.5,0]]]})")),
               ValidationError);
  EXPECT_THROW(parse_state(std::string_view(R"({"n": 2, "amplitudes": [[1,0],[1,0]]})")),
               NormalizationError);
  EXPECT_THROW(parse_state(std::string_view(R"({"n": 1, "amplitudes": [[1,0]]})")), DimensionError);
  EXPECT_NO_THROW(parse_state(std::string_view(R"({"n": 2, "amplitudes": [[1,0],[1,0]]})"),
                              StateOptions{.renormalize = true}));
}

TEST(StateJson, MissingFileIsParseError) {
  EXPECT_THROW(read_state_file("/nonexistent/state.json"), ParseError);
}

TEST(StateJson, RoundTripIsBitExact) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const Index n = 2 + static_cast<Index>(i % 7);
    const QuantonState s = sample_mixed(n, n, derive_seed(11, i));
    const ParsedState back = parse_state(std::string_view(to_json(s).dump()));
    EXPECT_EQ(back.density.rho(), s.rho());

    const PureState p = sample_pure(n, derive_seed(12, i));
    const ParsedState pback = parse_state(std::string_view(to_json(p).dump()));
    ASSERT_TRUE(pback.pure.has_value());
    EXPECT_EQ(pback.pure->amplitudes(), p.amplitudes());
  }
}

TEST(StateJson, ValidationReportJson) {
  const nlohmann::json j = to_json(validate(ComplexMatrix::Identity(2, 2) / 2.0));
  EXPECT_EQ(j.at("verdict"), "pass");
  EXPECT_EQ(j.at("trace_defect"), 0.0);
}

}  // namespace
}  // namespace duality
