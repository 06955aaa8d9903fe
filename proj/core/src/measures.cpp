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

#include "duality/measures.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "duality/detail/summation.hpp"
#include "duality/format.hpp"

namespace duality {

namespace {

constexpr double kClampReportThreshold = 1e-10;

double clamp_unit(double value, const char* what) {
  const double clamped = std::clamp(value, 0.0, 1.0);
  if (std::abs(clamped - value) > kClampReportThreshold) {
    std::clog << "duality: " << what << " clamped from " << format_double(value) << " to "
              << format_double(clamped) << '\n';
  }
  return clamped;
}

/// sqrt of the clamped populations after dividing them by their sum.
std::vector<double> root_populations(std::vector<double> populations) {
  detail::CompensatedSum total;
  for (double p : populations) total += p;
  const double t = total.value();
  for (double& p : populations) p = std::sqrt(p / t);
  return populations;
}

std::vector<double> populations_of(const PureState& state) {
  std::vector<double> p(static_cast<std::size_t>(state.paths()));
  for (Index j = 0; j < state.paths(); ++j) {
    p[static_cast<std::size_t>(j)] = std::clamp(std::norm(state.amplitudes()(j)), 0.0, 1.0);
  }
  return p;
}

/// sum_{i!=j} x_i x_j w_ij over ordered pairs; w = 1 when weights is null.
double weighted_cross_sum(std::span<const double> x, const Eigen::MatrixXd* weights) {
  detail::CompensatedSum s;
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double w = weights ? (*weights)(static_cast<Index>(i), static_cast<Index>(j)) : 1.0;
      s += x[i] * x[j] * w;
    }
  }
  return s.value();
}

// Returns sqrt(1 - X^2) with X = weighted_cross_sum / (n - 1). trace_deficit is
// 1 - sum x_i^2 (zero for normalised populations).
//
// For X > 1/2 the subtraction 1 - X^2 loses everything near X = 1, so 1 - X is
// rebuilt from the identity
//   (n - 1)(1 - X) = sum_{i<j} (x_i - x_j)^2 + (n - 1)(1 - sum x^2)
//                    + sum_{i!=j} x_i x_j (1 - w_ij),
// which is exactly zero for a uniform distribution.
double predictability_from_roots(std::span<const double> x, const Eigen::MatrixXd* weights,
                                 double trace_deficit, const char* what) {
  const auto n = static_cast<double>(x.size());
  const double cross = weighted_cross_sum(x, weights) / (n - 1.0);
  double p2 = 0.0;
  if (cross <= 0.5) {
    p2 = 1.0 - cross * cross;
  } else {
    detail::CompensatedSum gap;
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = i + 1; j < x.size(); ++j) {
        const double d = x[i] - x[j];
        gap += d * d;
      }
    }
    gap += (n - 1.0) * trace_deficit;
    if (weights != nullptr) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < x.size(); ++j) {
          if (i == j) continue;
          gap += x[i] * x[j] * (1.0 - (*weights)(static_cast<Index>(i), static_cast<Index>(j)));
        }
      }
    }
    p2 = gap.value() / (n - 1.0) * (1.0 + cross);
  }
  return std::sqrt(clamp_unit(p2, what));
}

double offdiagonal_sum(const QuantonState& state, bool squared) {
  detail::CompensatedSum s;
  const Index n = state.paths();
  for (Index j = 0; j < n; ++j) {
    for (Index k = 0; k < n; ++k) {
      if (j == k) continue;
      s += squared ? std::norm(state(j, k)) : std::abs(state(j, k));
    }
  }
  return s.value();
}

void require_paths(const QuantonState& state, Index n, const char* what) {
  if (state.paths() != n) {
    std::ostringstream os;
    os << what << " needs n = " << n << ", got n = " << state.paths();
    throw DimensionError(os.str());
  }
}

}  // namespace

double coherence(const QuantonState& state) {
  return offdiagonal_sum(state, false) / static_cast<double>(state.paths() - 1);
}

double predictability(const QuantonState& state) {
  const std::vector<double> x = root_populations(state.populations());
  return predictability_from_roots(x, nullptr, 0.0, "predictability argument");
}

double gy_predictability(const QuantonState& state) {
  require_paths(state, 2, "two-path predictability");
  const double t = state.population(0) + state.population(1);
  const double a = state.population(0) / t;
  const double b = state.population(1) / t;
  const double product = 4.0 * a * b;
  // 1 - 4ab = (a - b)^2 when a + b = 1; the difference form is exact near a = b.
  const double p2 = product <= 0.25 ? 1.0 - product : (a - b) * (a - b);
  return std::sqrt(clamp_unit(p2, "two-path predictability argument"));
}

double durr_visibility(const QuantonState& state) {
  const auto n = static_cast<double>(state.paths());
  return std::sqrt(n / (n - 1.0) * offdiagonal_sum(state, true));
}

DetectorGram::DetectorGram(Eigen::MatrixXd overlap) : overlap_(std::move(overlap)) {
  if (overlap_.rows() != overlap_.cols() || overlap_.rows() < kMinPaths) {
    throw DimensionError("detector overlap matrix must be square with n >= 2");
  }
  const Index n = overlap_.rows();
  for (Index i = 0; i < n; ++i) {
    if (overlap_(i, i) != 1.0) throw RangeError("detector overlaps need a unit diagonal");
    for (Index j = 0; j < n; ++j) {
      const double v = overlap_(i, j);
      if (!(v >= 0.0 && v <= 1.0)) throw RangeError("detector overlap magnitudes must lie in [0, 1]");
      if (v != overlap_(j, i)) throw RangeError("detector overlap matrix must be symmetric");
    }
  }
}

DetectorGram DetectorGram::identical(Index n) { return DetectorGram(Eigen::MatrixXd::Ones(n, n)); }

DetectorGram DetectorGram::orthogonal(Index n) {
  return DetectorGram(Eigen::MatrixXd::Identity(n, n));
}

double distinguishability(const PureState& state, const DetectorGram& gram) {
  if (state.paths() != gram.paths()) {
    std::ostringstream os;
    os << "state has " << state.paths() << " paths but detector matrix has " << gram.paths();
    throw DimensionError(os.str());
  }
  const std::vector<double> x = root_populations(populations_of(state));
  return predictability_from_roots(x, &gram.overlap(), 0.0, "distinguishability argument");
}

DualityTerms duality_terms(const QuantonState& state) {
  const std::vector<double> x = root_populations(state.populations());
  const auto norm = static_cast<double>(state.paths() - 1);
  return DualityTerms{weighted_cross_sum(x, nullptr) / norm, coherence(state)};
}

double DualityEvaluation::identity_gap() const noexcept {
  return std::abs(report.duality_sum - identity_sum);
}

DualityEvaluation evaluate_duality(const QuantonState& state) {
  DualityEvaluation out;
  MeasureReport& r = out.report;
  r.n = state.paths();
  const DualityTerms terms = duality_terms(state);
  r.coherence = terms.coherence_sum;
  r.predictability = predictability(state);
  r.durr_visibility = durr_visibility(state);
  r.duality_sum = r.predictability * r.predictability + r.coherence * r.coherence;
  r.residual = 1.0 - r.duality_sum;
  r.purity = state.purity();
  out.identity_sum = terms.identity_sum();
  return out;
}

MeasureReport duality_report(const QuantonState& state) {
  const DualityEvaluation eval = evaluate_duality(state);
  const double gap = eval.identity_gap();
  if (!(gap <= kIdentityTolerance)) {
    throw std::logic_error("P^2 + C^2 and 1 - A^2 + B^2 disagree by " + format_double(gap));
  }
  return eval.report;
}

double perturbed_predictability(const QuantonState& state, Index j, Index k, double epsilon) {
  const Index n = state.paths();
  if (j < 0 || k < 0 || j >= n || k >= n || j == k) {
    throw RangeError("path indices must be distinct and inside [0, n)");
  }
  if (state.max_coherence_entry() > Tolerances{}.hermitian) {
    throw RangeError("perturbed predictability is defined for diagonal states only");
  }
  std::vector<double> x = root_populations(state.populations());
  const auto uj = static_cast<std::size_t>(j);
  const auto uk = static_cast<std::size_t>(k);
  if (!(x[uj] < x[uk])) throw RangeError("need rho_jj < rho_kk");
  const double spread = x[uk] - x[uj];
  if (!(epsilon > 0.0 && epsilon < spread)) {
    throw RangeError("epsilon must satisfy 0 < epsilon < sqrt(rho_kk) - sqrt(rho_jj)");
  }
  x[uj] += epsilon;
  x[uk] -= epsilon;
  // (x_j + e)^2 + (x_k - e)^2 = x_j^2 + x_k^2 - 2e(x_k - x_j - e)
  const double deficit = 2.0 * epsilon * (spread - epsilon);
  return predictability_from_roots(x, nullptr, deficit, "perturbed predictability argument");
}

ThreeSlitForms three_slit_forms(const QuantonState& state) {
  require_paths(state, 3, "three-slit forms");
  ThreeSlitForms out;
  out.coherence = std::abs(state(0, 1)) + std::abs(state(1, 2)) + std::abs(state(0, 2));

  const std::vector<double> x = root_populations(state.populations());
  const double cross = x[0] * x[1] + x[1] * x[2] + x[0] * x[2];
  double p2 = 0.0;
  if (cross <= 0.5) {
    p2 = 1.0 - cross * cross;
  } else {
    const double d01 = x[0] - x[1];
    const double d12 = x[1] - x[2];
    const double d02 = x[0] - x[2];
    p2 = 0.5 * (d01 * d01 + d12 * d12 + d02 * d02) * (1.0 + cross);
  }
  out.predictability = std::sqrt(clamp_unit(p2, "three-slit predictability argument"));
  return out;
}

nlohmann::json to_json(const MeasureReport& r) {
  return nlohmann::json{{"n", r.n},
                        {"coherence", r.coherence},
                        {"predictability", r.predictability},
                        {"durr_visibility", r.durr_visibility},
                        {"duality_sum", r.duality_sum},
                        {"residual", r.residual},
                        {"purity", r.purity}};
}

std::string csv_header() {
  return "n,coherence,predictability,durr_visibility,duality_sum,residual,purity";
}

std::string to_csv_row(const MeasureReport& r) {
  std::string row = std::to_string(r.n);
  for (double v : {r.coherence, r.predictability, r.durr_visibility, r.duality_sum, r.residual,
                   r.purity}) {
    row += ',';
    row += format_double(v);
  }
  return row;
}

}  // namespace duality
