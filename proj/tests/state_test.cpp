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

#include "duality/state.hpp"

#include <gtest/gtest.h>

#include "duality/ensembles.hpp"
#include "oracles.hpp"

namespace duality {
namespace {

using namespace std::complex_literals;

ComplexMatrix mat2(std::complex<double> a, std::complex<double> b, std::complex<double> c,
                   std::complex<double> d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

TEST(Validate, MaximallyMixedPasses) {
  const ValidationReport r = validate(ComplexMatrix::Identity(2, 2) / 2.0);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.hermitian_defect, 0.0);
  EXPECT_EQ(r.trace_defect, 0.0);
  EXPECT_DOUBLE_EQ(r.min_eigenvalue, 0.5);
  EXPECT_TRUE(r.reason.empty());
}

TEST(Validate, NegativeEigenvalueFails) {
  const ValidationReport r = validate(mat2(0.5, 0.6, 0.6, 0.5));
  EXPECT_FALSE(r.passed);
  const auto [lo, hi] = oracle::eigen2(0.5, 0.6, 0.5);
  EXPECT_NEAR(r.min_eigenvalue, lo, 1e-15);
  EXPECT_NEAR(r.min_eigenvalue, -0.1, 1e-15);
  EXPECT_NE(r.reason.find("positive semi-definite"), std::string::npos);
}

TEST(Validate, AntiHermitianOffDiagonalFails) {
  const ValidationReport r = validate(mat2(0.5, 0.1i, 0.1i, 0.5));
  EXPECT_FALSE(r.passed);
  EXPECT_NEAR(r.hermitian_defect, 0.2, 1e-15);
  EXPECT_NE(r.reason.find("Hermitian"), std::string::npos);
}

TEST(Validate, TraceDefectReported) {
  const ValidationReport r = validate(mat2(0.5, 0.0, 0.0, 0.6));
  EXPECT_FALSE(r.passed);
  EXPECT_NEAR(r.trace_defect, 0.1, 1e-15);
}

TEST(Validate, ToleranceScalesWithDimension) {
  ComplexMatrix m = ComplexMatrix::Identity(4, 4) / 4.0;
  m(0, 0) += 3e-10;
  m(1, 1) -= 3e-10;
  m(2, 2) = -3e-10;
  m(3, 3) = 0.5 + 3e-10;
  const ValidationReport r = validate(m);
  EXPECT_TRUE(r.passed) << r.reason;  // -3e-10 >= -4e-10
}

TEST(Validate, ShapeErrors) {
  EXPECT_THROW(validate(ComplexMatrix::Zero(2, 3)), DimensionError);
  EXPECT_THROW(validate(ComplexMatrix::Ones(1, 1)), DimensionError);
}

TEST(Validate, NonFiniteFails) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2) / 2.0;
  m(0, 1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_FALSE(validate(m).passed);
}

TEST(QuantonState, RejectsInvalidWithReport) {
  try {
    QuantonState s(mat2(0.5, 0.6, 0.6, 0.5));
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_FALSE(e.report().passed);
    EXPECT_NEAR(e.report().min_eigenvalue, -0.1, 1e-15);
  }
}

TEST(QuantonState, RenormalizeOption) {
  const ComplexMatrix m = mat2(1.0, 0.5, 0.5, 1.0);
  EXPECT_THROW(QuantonState{m}, ValidationError);
  const QuantonState s(m, StateOptions{.renormalize = true});
  EXPECT_DOUBLE_EQ(s(0, 0).real(), 0.5);
  EXPECT_DOUBLE_EQ(s(0, 1).real(), 0.25);
}

TEST(QuantonState, PopulationsClampTinyNegatives) {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(0, 0) = 1.0 + 5e-11;
  m(1, 1) = -5e-11;
  const QuantonState s(m);
  EXPECT_EQ(s.population(0), 1.0);
  EXPECT_EQ(s.population(1), 0.0);
}

TEST(FromPure, BasisVector) {
  ComplexVector c(2);
  c << 1.0, 0.0;
  const QuantonState s = from_pure(PureState(c));
  EXPECT_EQ(s.rho(), (ComplexMatrix(2, 2) << 1.0, 0.0, 0.0, 0.0).finished());
}

TEST(FromPure, EqualSuperposition) {
  const QuantonState s = from_pure(PureState::equal_superposition(2));
  for (Index j = 0; j < 2; ++j)
    for (Index k = 0; k < 2; ++k) EXPECT_NEAR(s(j, k).real(), 0.5, 1e-15);
}

TEST(FromPure, BiasedAmplitudes) {
  ComplexVector c(2);
  c << std::sqrt(0.9), std::sqrt(0.1);
  const QuantonState s = from_pure(PureState(c));
  EXPECT_NEAR(s(0, 0).real(), 0.9, 1e-15);
  EXPECT_NEAR(s(0, 1).real(), 0.3, 1e-15);
  EXPECT_NEAR(s(1, 0).real(), 0.3, 1e-15);
  EXPECT_NEAR(s(1, 1).real(), 0.1, 1e-15);
}

TEST(FromPure, NormalizationEnforced) {
  ComplexVector c(2);
  c << 1.0, 1.0;
  EXPECT_THROW(PureState{c}, NormalizationError);
  const PureState p(c, StateOptions{.renormalize = true});
  EXPECT_NEAR(p.amplitudes().squaredNorm(), 1.0, 1e-15);
  EXPECT_THROW(PureState(ComplexVector::Ones(1)), DimensionError);
}

TEST(FromPure, RandomStatesAlwaysValidate) {
  oracle::TestRng rng(7);
  for (int trial = 0; trial < 10000; ++trial) {
    const Index n = 2 + trial % 7;
    const QuantonState s = from_pure(PureState(oracle::random_amplitudes(n, rng)));
    EXPECT_TRUE(validate(s.rho()).passed);
  }
}

TEST(Dephase, Examples) {
  const QuantonState pure = from_pure(PureState::equal_superposition(2));
  EXPECT_EQ(dephase(pure, 1.0).rho(), pure.rho());
  const QuantonState diag = dephase(pure, 0.0);
  EXPECT_EQ(diag(0, 1), 0.0);
  EXPECT_EQ(diag(0, 0), pure(0, 0));
  const QuantonState half = dephase(pure, 0.5);
  EXPECT_NEAR(half(0, 1).real(), 0.25, 1e-15);
  EXPECT_NEAR(half(0, 0).real(), 0.5, 1e-15);
  EXPECT_THROW(dephase(pure, 1.5), RangeError);
  EXPECT_THROW(dephase(pure, -0.1), RangeError);
  EXPECT_THROW(dephase(pure, std::nan("")), RangeError);
}

TEST(Depolarize, Examples) {
  const QuantonState pure = from_pure(PureState::equal_superposition(2));
  EXPECT_EQ(depolarize(pure, 0.0).rho(), pure.rho());
  EXPECT_EQ(depolarize(pure, 1.0).rho(), ComplexMatrix::Identity(2, 2) / 2.0);
  const QuantonState half = depolarize(pure, 0.5);
  EXPECT_NEAR(half(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(half(0, 1).real(), 0.25, 1e-15);
  EXPECT_THROW(depolarize(pure, 2.0), RangeError);
}

class ChannelProperties : public ::testing::TestWithParam<int> {};

TEST_P(ChannelProperties, HoldOnRandomStates) {
  const Index n = GetParam();
  oracle::TestRng rng(100 + static_cast<std::uint64_t>(n));
  for (int trial = 0; trial < 500; ++trial) {
    const QuantonState s = sample_mixed(n, 1 + trial % n, derive_seed(5, static_cast<std::uint64_t>(trial)));

    // PSD principal-submatrix bound.
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (j != k) {
          EXPECT_LE(std::abs(s(j, k)), std::sqrt(s.population(j) * s.population(k)) + 1e-12);
        }

    const double l1 = rng.uniform();
    const double l2 = rng.uniform();
    const ComplexMatrix once = dephase(s, l1 * l2).rho();
    const ComplexMatrix twice = dephase(dephase(s, l1), l2).rho();
    EXPECT_LE((once - twice).cwiseAbs().maxCoeff(), 1e-15);

    const QuantonState d = depolarize(s, rng.uniform());
    EXPECT_LE(std::abs(d.rho().trace() - 1.0), 1e-14);
  }
}

INSTANTIATE_TEST_SUITE_P(PathCounts, ChannelProperties, ::testing::Values(2, 3, 5, 8, 16));

}  // namespace
}  // namespace duality
