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

#ifndef DUALITY_MEASURES_HPP
#define DUALITY_MEASURES_HPP

#include <span>
#include <string>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "duality/state.hpp"

namespace duality {

// Wave and particle measures of an n-path state.
//
// Every sum written over j != k runs over ordered pairs, so for n = 2 the
// pair (1,2) contributes twice. Population-based quantities (predictability,
// distinguishability, the cross sum A) read the clamped diagonal divided by
// its sum; the off-diagonal quantities read rho as stored.

/// (1/(n-1)) sum_{j!=k} |rho_jk|.
double coherence(const QuantonState& state);

/// sqrt(1 - [(1/(n-1)) sum_{j!=k} sqrt(rho_jj) sqrt(rho_kk)]^2).
double predictability(const QuantonState& state);

/// Two-path form sqrt(1 - 4 rho_11 rho_22). Throws DimensionError unless n = 2.
double gy_predictability(const QuantonState& state);

/// sqrt((n/(n-1)) sum_{j!=k} |rho_jk|^2).
double durr_visibility(const QuantonState& state);

/// Magnitudes |<d_i|d_j>| of the overlaps between detector states. Must be
/// symmetric with unit diagonal and entries in [0, 1].
class DetectorGram {
 public:
  /// Throws DimensionError or RangeError.
  explicit DetectorGram(Eigen::MatrixXd overlap);

  /// All detector states identical: every overlap is 1.
  static DetectorGram identical(Index n);
  /// Mutually orthogonal detector states.
  static DetectorGram orthogonal(Index n);

  Index paths() const noexcept { return overlap_.rows(); }
  const Eigen::MatrixXd& overlap() const noexcept { return overlap_; }

 private:
  Eigen::MatrixXd overlap_;
};

/// sqrt(1 - [(1/(n-1)) sum_{i!=j} |c_i c_j| |<d_i|d_j>|]^2).
/// With DetectorGram::identical this is predictability(from_pure(state)).
double distinguishability(const PureState& state, const DetectorGram& gram);

/// Normalised pair sums: cross_sum A = (1/(n-1)) sum_{j!=k} sqrt(rho_jj rho_kk)
/// and coherence_sum B = (1/(n-1)) sum_{j!=k} |rho_jk|.
struct DualityTerms {
  double cross_sum = 0.0;
  double coherence_sum = 0.0;

  /// 1 - A^2 + B^2, which equals P^2 + C^2.
  double identity_sum() const noexcept {
    return 1.0 - cross_sum * cross_sum + coherence_sum * coherence_sum;
  }
};

DualityTerms duality_terms(const QuantonState& state);

struct MeasureReport {
  Index n = 0;
  double coherence = 0.0;
  double predictability = 0.0;
  double durr_visibility = 0.0;
  double duality_sum = 0.0;  // P^2 + C^2
  double residual = 0.0;     // 1 - P^2 - C^2
  double purity = 0.0;       // tr(rho^2)
};

/// Largest tolerated gap between P^2 + C^2 and 1 - A^2 + B^2.
inline constexpr double kIdentityTolerance = 1e-12;

struct DualityEvaluation {
  MeasureReport report;
  double identity_sum = 0.0;  // 1 - A^2 + B^2 for the same state

  double identity_gap() const noexcept;
};

/// Report plus the second evaluation of P^2 + C^2, without judging them.
DualityEvaluation evaluate_duality(const QuantonState& state);

/// Fills every field. Throws std::logic_error if the two evaluations of
/// P^2 + C^2 disagree by more than kIdentityTolerance.
MeasureReport duality_report(const QuantonState& state);

/// Predictability after sqrt(rho_jj) -> sqrt(rho_jj) + epsilon and
/// sqrt(rho_kk) -> sqrt(rho_kk) - epsilon (0-based j, k). The perturbed
/// vector is not renormalised. Requires a diagonal state (off-diagonals at
/// most Tolerances::hermitian), rho_jj < rho_kk and
/// 0 < epsilon < sqrt(rho_kk) - sqrt(rho_jj); throws RangeError otherwise.
double perturbed_predictability(const QuantonState& state, Index j, Index k, double epsilon);

struct ThreeSlitForms {
  double coherence = 0.0;       // |rho_12| + |rho_23| + |rho_13|
  double predictability = 0.0;  // three-term cross sum form
};

/// Explicit three-path expressions. Throws DimensionError unless n = 3.
ThreeSlitForms three_slit_forms(const QuantonState& state);

nlohmann::json to_json(const MeasureReport& report);

/// "n,coherence,predictability,durr_visibility,duality_sum,residual,purity"
std::string csv_header();
/// One row, doubles printed with 17 significant digits.
std::string to_csv_row(const MeasureReport& report);

}  // namespace duality

#endif  // DUALITY_MEASURES_HPP
