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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "duality/format.hpp"

namespace duality {

namespace {

constexpr double kImaginaryResidueLimit = 1e-12;

/// exp(2 pi i m / points) for m in [0, points), cached per thread.
const std::vector<std::complex<double>>& unit_roots(int points) {
  thread_local std::vector<std::complex<double>> table;
  if (static_cast<int>(table.size()) != points) {
    table.resize(static_cast<std::size_t>(points));
    for (int m = 0; m < points; ++m) {
      table[static_cast<std::size_t>(m)] = std::polar(1.0, 2.0 * std::numbers::pi * m / points);
    }
  }
  return table;
}

}  // namespace

PhasePattern pattern(const QuantonState& state, int points) {
  if (points < kMinPatternPoints) {
    throw RangeError("pattern needs at least " + std::to_string(kMinPatternPoints) + " points");
  }
  const Index n = state.paths();

  // Sum rho along each diagonal: lag d = j - k in (-n, n).
  std::vector<std::complex<double>> lag(static_cast<std::size_t>(2 * n - 1));
  for (Index j = 0; j < n; ++j)
    for (Index k = 0; k < n; ++k) lag[static_cast<std::size_t>(j - k + n - 1)] += state(j, k);

  PhasePattern out;
  out.n = n;
  out.points = points;
  out.phi.resize(static_cast<std::size_t>(points));
  out.intensity.resize(static_cast<std::size_t>(points));
  const auto& roots = unit_roots(points);
  double worst_residue = 0.0;
  for (int m = 0; m < points; ++m) {
    const double phi = 2.0 * std::numbers::pi * m / points;
    std::complex<double> total = lag[static_cast<std::size_t>(n - 1)];
    for (Index d = 1; d < n; ++d) {
      const std::complex<double> phase =
          roots[static_cast<std::size_t>(static_cast<long long>(d) * m % points)];
      total += lag[static_cast<std::size_t>(n - 1 + d)] * phase;
      total += lag[static_cast<std::size_t>(n - 1 - d)] * std::conj(phase);
    }
    worst_residue = std::max(worst_residue, std::abs(total.imag()));
    out.phi[static_cast<std::size_t>(m)] = phi;
    out.intensity[static_cast<std::size_t>(m)] = total.real();
  }
  if (worst_residue > kImaginaryResidueLimit) {
    throw std::logic_error("interference sum has imaginary residue " + format_double(worst_residue));
  }
  return out;
}

double fringe_visibility(const PhasePattern& pattern) {
  if (pattern.intensity.empty()) throw DegeneratePatternError("empty pattern");
  const auto [lo, hi] = std::minmax_element(pattern.intensity.begin(), pattern.intensity.end());
  const double i_min = std::max(*lo, 0.0);
  const double i_max = std::max(*hi, 0.0);
  if (i_max + i_min <= 0.0) throw DegeneratePatternError("pattern has no intensity");
  return (i_max - i_min) / (i_max + i_min);
}

std::string to_csv(const PhasePattern& pattern) {
  std::string out = "phi,intensity\n";
  for (std::size_t m = 0; m < pattern.phi.size(); ++m) {
    out += format_double(pattern.phi[m]);
    out += ',';
    out += format_double(pattern.intensity[m]);
    out += '\n';
  }
  return out;
}

}  // namespace duality
