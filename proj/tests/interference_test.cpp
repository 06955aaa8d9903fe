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

#include "duality/interference.hpp"

#include <numbers>
#include <numeric>

#include <gtest/gtest.h>

#include "duality/ensembles.hpp"
#include "duality/measures.hpp"

namespace duality {
namespace {

QuantonState equal_pure(Index n) { return from_pure(PureState::equal_superposition(n)); }

TEST(Pattern, TwoSlitEqualSuperposition) {
  const PhasePattern p = pattern(equal_pure(2), 4096);
  ASSERT_EQ(p.phi.size(), 4096U);
  EXPECT_EQ(p.n, 2);
  EXPECT_EQ(p.points, 4096);
  for (std::size_t m = 0; m < p.phi.size(); ++m) {
    EXPECT_NEAR(p.phi[m], 2.0 * std::numbers::pi * static_cast<double>(m) / 4096.0, 1e-15);
    EXPECT_NEAR(p.intensity[m], 1.0 + std::cos(p.phi[m]), 1e-14);
  }
  EXPECT_NEAR(p.intensity[0], 2.0, 1e-15);
  EXPECT_NEAR(p.intensity[2048], 0.0, 1e-15);
  EXPECT_NEAR(fringe_visibility(p), 1.0, 1e-3);
}

TEST(Pattern, MaximallyMixedIsFlat) {
  for (Index n = 2; n <= 6; ++n) {
    const PhasePattern p = pattern(QuantonState::maximally_mixed(n), 64);
    for (double v : p.intensity) EXPECT_NEAR(v, 1.0, 1e-15);
    EXPECT_NEAR(fringe_visibility(p), 0.0, 1e-15);
  }
}

TEST(Pattern, DephasedTwoSlit) {
  const PhasePattern p = pattern(dephase(equal_pure(2), 0.6), 4096);
  for (std::size_t m = 0; m < p.phi.size(); ++m) {
    EXPECT_NEAR(p.intensity[m], 1.0 + 0.6 * std::cos(p.phi[m]), 1e-14);
  }
  EXPECT_NEAR(fringe_visibility(p), 0.6, 1e-3);
}

TEST(Pattern, RangeAndDegenerateErrors) {
  EXPECT_THROW(pattern(equal_pure(2), 15), RangeError);
  EXPECT_NO_THROW(pattern(equal_pure(2), 16));
  PhasePattern zero;
  zero.intensity.assign(32, 0.0);
  EXPECT_THROW(fringe_visibility(zero), DegeneratePatternError);
  EXPECT_THROW(fringe_visibility(PhasePattern{}), DegeneratePatternError);
}

TEST(Pattern, MatchesDirectDoubleSum) {
  const QuantonState s = sample_mixed(4, 3, 17);
  const PhasePattern p = pattern(s, 128);
  for (std::size_t m = 0; m < p.phi.size(); ++m) {
    std::complex<double> direct = 0.0;
    for (Index j = 0; j < 4; ++j)
      for (Index k = 0; k < 4; ++k)
        direct += s(j, k) * std::exp(std::complex<double>(0.0, static_cast<double>(j - k) * p.phi[m]));
    EXPECT_NEAR(p.intensity[m], direct.real(), 1e-13);
    EXPECT_NEAR(direct.imag(), 0.0, 1e-13);
  }
}

class PatternProperties : public ::testing::TestWithParam<int> {};

TEST_P(PatternProperties, NonnegativeWithUnitMeanAndBoundedPeak) {
  const Index n = GetParam();
  for (std::uint64_t i = 0; i < 300; ++i) {
    const QuantonState s = i % 2 ? sample_mixed(n, n, derive_seed(40, i))
                                 : from_pure(sample_pure(n, derive_seed(41, i)));
    const PhasePattern p = pattern(s, 1024);
    const double mean = std::accumulate(p.intensity.begin(), p.intensity.end(), 0.0) / 1024.0;
    EXPECT_NEAR(mean, 1.0, 1e-12);
    for (double v : p.intensity) {
      EXPECT_GE(v, -1e-12);
      EXPECT_LE(v, static_cast<double>(n) + 1e-12);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(PathCounts, PatternProperties, ::testing::Values(2, 3, 5, 8));

TEST(FringeVisibility, TracksTwoPathCoherence) {
  for (std::uint64_t i = 0; i < 2000; ++i) {
    const QuantonState s = sample_mixed(2, 1 + static_cast<Index>(i % 2), derive_seed(42, i));
    const double v = fringe_visibility(pattern(s, 4096));
    EXPECT_NEAR(v, coherence(s), 1e-3);
    const double lambda = static_cast<double>(i % 11) / 10.0;
    EXPECT_NEAR(fringe_visibility(pattern(dephase(s, lambda), 4096)), lambda * v, 2e-3);
  }
}

TEST(PatternCsv, HeaderAndRows) {
  const std::string csv = to_csv(pattern(QuantonState::maximally_mixed(3), 16));
  EXPECT_EQ(csv.substr(0, 14), "phi,intensity\n");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 17);
  EXPECT_NE(csv.find("\n0,1\n"), std::string::npos);
}

}  // namespace
}  // namespace duality
