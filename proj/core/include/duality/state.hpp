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

#ifndef DUALITY_STATE_HPP
#define DUALITY_STATE_HPP

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "duality/errors.hpp"

namespace duality {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Smallest meaningful number of paths. Sizes up to 64 are tested; nothing
/// enforces an upper limit.
inline constexpr Index kMinPaths = 2;

/// Numerical acceptance thresholds for density matrices. The PSD threshold
/// scales with the dimension.
struct Tolerances {
  double hermitian = 1e-10;
  double trace = 1e-10;
  double psd_per_path = 1e-10;

  double psd(Index n) const { return psd_per_path * static_cast<double>(n); }
};

struct ValidationReport {
  Index n = 0;
  double hermitian_defect = 0.0;  // max_jk |m_jk - conj(m_kj)|
  double trace_defect = 0.0;      // |sum_j m_jj - 1|
  double min_eigenvalue = 0.0;    // of the Hermitian part
  bool passed = false;
  std::string reason;  // empty when passed
};

/// Checks Hermiticity, unit trace and positive semi-definiteness. Throws
/// DimensionError for non-square input or n < 2; all other defects are
/// reported, not thrown.
ValidationReport validate(const ComplexMatrix& matrix, const Tolerances& tol = {});

class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

struct StateOptions {
  /// Divide by the trace (or the squared norm, for amplitudes) before
  /// validating instead of rejecting a non-unit normalisation.
  bool renormalize = false;
};

/// Validated n-path density matrix expressed in the path basis.
/// Immutable once constructed.
class QuantonState {
 public:
  /// Throws DimensionError or ValidationError.
  explicit QuantonState(ComplexMatrix rho, StateOptions options = {});

  static QuantonState maximally_mixed(Index n);
  static QuantonState diagonal(const std::vector<double>& populations);

  Index paths() const noexcept { return rho_.rows(); }
  const ComplexMatrix& rho() const noexcept { return rho_; }
  std::complex<double> operator()(Index j, Index k) const { return rho_(j, k); }

  /// Real part of rho_jj clamped into [0, 1].
  double population(Index j) const;
  std::vector<double> populations() const;

  /// tr(rho^2), computed as the sum of |rho_jk|^2.
  double purity() const;

  /// Largest off-diagonal magnitude.
  double max_coherence_entry() const;

 private:
  ComplexMatrix rho_;
};

/// Amplitudes c_j over the path basis, normalised to sum |c_j|^2 = 1.
class PureState {
 public:
  /// Throws DimensionError (n < 2) or NormalizationError.
  explicit PureState(ComplexVector amplitudes, StateOptions options = {});

  static PureState equal_superposition(Index n);

  Index paths() const noexcept { return amplitudes_.size(); }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }

 private:
  ComplexVector amplitudes_;
};

/// rho_jk = c_j conj(c_k); the diagonal is stored as |c_j|^2 exactly.
QuantonState from_pure(const PureState& state);

/// Scales every off-diagonal element by lambda in [0, 1].
QuantonState dephase(const QuantonState& state, double lambda);

/// (1 - p) rho + p I/n for p in [0, 1].
QuantonState depolarize(const QuantonState& state, double p);

}  // namespace duality

#endif  // DUALITY_STATE_HPP
