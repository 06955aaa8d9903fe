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

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace duality {

namespace {

void require_square(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << "density matrix must be square, got " << m.rows() << "x" << m.cols();
    throw DimensionError(os.str());
  }
  if (m.rows() < kMinPaths) {
    std::ostringstream os;
    os << "need at least " << kMinPaths << " paths, got " << m.rows();
    throw DimensionError(os.str());
  }
}

std::string describe(const ValidationReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << "invalid density matrix (n=" << r.n << "): " << r.reason
     << " [hermitian_defect=" << r.hermitian_defect << ", trace_defect=" << r.trace_defect
     << ", min_eigenvalue=" << r.min_eigenvalue << "]";
  return os.str();
}

}  // namespace

ValidationReport validate(const ComplexMatrix& matrix, const Tolerances& tol) {
  require_square(matrix);
  ValidationReport report;
  const Index n = matrix.rows();
  report.n = n;

  if (!matrix.allFinite()) {
    report.hermitian_defect = report.trace_defect = std::numeric_limits<double>::infinity();
    report.min_eigenvalue = -std::numeric_limits<double>::infinity();
    report.reason = "non-finite entry";
    return report;
  }

  double herm = 0.0;
  for (Index j = 0; j < n; ++j) {
    for (Index k = j; k < n; ++k) {
      herm = std::max(herm, std::abs(matrix(j, k) - std::conj(matrix(k, j))));
    }
  }
  report.hermitian_defect = herm;
  report.trace_defect = std::abs(matrix.trace() - 1.0);

  const ComplexMatrix hermitian_part = 0.5 * (matrix + matrix.adjoint());
  const bool is_diagonal = (hermitian_part.array() != std::complex<double>(0.0)).count() ==
                           (hermitian_part.diagonal().array() != std::complex<double>(0.0)).count();
  if (is_diagonal) {
    // Eigenvalues of a diagonal matrix are its entries.
    report.min_eigenvalue = hermitian_part.diagonal().real().minCoeff();
  } else {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part, Eigen::EigenvaluesOnly);
    report.min_eigenvalue = solver.eigenvalues().minCoeff();
  }

  std::vector<std::string> failures;
  if (report.hermitian_defect > tol.hermitian) failures.emplace_back("not Hermitian");
  if (report.trace_defect > tol.trace) failures.emplace_back("trace differs from 1");
  if (report.min_eigenvalue < -tol.psd(n)) failures.emplace_back("not positive semi-definite");

  report.passed = failures.empty();
  for (std::size_t i = 0; i < failures.size(); ++i) {
    if (i != 0) report.reason += "; ";
    report.reason += failures[i];
  }
  return report;
}

ValidationError::ValidationError(ValidationReport report)
    : Error(describe(report)), report_(std::move(report)) {}

QuantonState::QuantonState(ComplexMatrix rho, StateOptions options) : rho_(std::move(rho)) {
  require_square(rho_);
  if (options.renormalize) {
    const double trace = rho_.trace().real();
    if (std::isfinite(trace) && trace > 0.0) rho_ /= trace;
  }
  ValidationReport report = validate(rho_);
  if (!report.passed) throw ValidationError(std::move(report));
}

QuantonState QuantonState::maximally_mixed(Index n) {
  if (n < kMinPaths) throw DimensionError("need at least 2 paths");
  return QuantonState(ComplexMatrix::Identity(n, n) / static_cast<double>(n));
}

QuantonState QuantonState::diagonal(const std::vector<double>& populations) {
  const auto n = static_cast<Index>(populations.size());
  ComplexMatrix rho = ComplexMatrix::Zero(n, n);
  for (Index j = 0; j < n; ++j) rho(j, j) = populations[static_cast<std::size_t>(j)];
  return QuantonState(std::move(rho));
}

double QuantonState::population(Index j) const {
  return std::clamp(rho_(j, j).real(), 0.0, 1.0);
}

std::vector<double> QuantonState::populations() const {
  std::vector<double> out(static_cast<std::size_t>(paths()));
  for (Index j = 0; j < paths(); ++j) out[static_cast<std::size_t>(j)] = population(j);
  return out;
}

double QuantonState::purity() const { return rho_.cwiseAbs2().sum(); }

double QuantonState::max_coherence_entry() const {
  double m = 0.0;
  for (Index j = 0; j < paths(); ++j)
    for (Index k = 0; k < paths(); ++k)
      if (j != k) m = std::max(m, std::abs(rho_(j, k)));
  return m;
}

PureState::PureState(ComplexVector amplitudes, StateOptions options)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() < kMinPaths) {
    throw DimensionError("need at least 2 amplitudes, got " + std::to_string(amplitudes_.size()));
  }
  if (!amplitudes_.allFinite()) throw NormalizationError("non-finite amplitude");
  const double norm2 = amplitudes_.squaredNorm();
  if (options.renormalize && norm2 > 0.0) {
    amplitudes_ /= std::sqrt(norm2);
    return;
  }
  if (std::abs(norm2 - 1.0) > Tolerances{}.trace) {
    std::ostringstream os;
    os.precision(17);
    os << "amplitudes are not normalised: sum |c_j|^2 = " << norm2;
    throw NormalizationError(os.str());
  }
}

PureState PureState::equal_superposition(Index n) {
  if (n < kMinPaths) throw DimensionError("need at least 2 amplitudes");
  return PureState(ComplexVector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n))),
                   StateOptions{.renormalize = true});
}

QuantonState from_pure(const PureState& state) {
  const ComplexVector& c = state.amplitudes();
  ComplexMatrix rho = c * c.adjoint();
  for (Index j = 0; j < c.size(); ++j) rho(j, j) = std::norm(c(j));
  return QuantonState(std::move(rho));
}

QuantonState dephase(const QuantonState& state, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw RangeError("dephasing strength must lie in [0, 1], got " + std::to_string(lambda));
  }
  ComplexMatrix rho = state.rho();
  for (Index j = 0; j < rho.rows(); ++j)
    for (Index k = 0; k < rho.cols(); ++k)
      if (j != k) rho(j, k) *= lambda;
  return QuantonState(std::move(rho));
}

QuantonState depolarize(const QuantonState& state, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw RangeError("depolarizing probability must lie in [0, 1], got " + std::to_string(p));
  }
  const Index n = state.paths();
  ComplexMatrix rho = (1.0 - p) * state.rho();
  rho.diagonal().array() += p / static_cast<double>(n);
  return QuantonState(std::move(rho));
}

}  // namespace duality
