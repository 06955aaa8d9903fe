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

#ifndef DUALITY_INTERFERENCE_HPP
#define DUALITY_INTERFERENCE_HPP

#include <string>
#include <vector>

#include "duality/state.hpp"

namespace duality {

// Far-field pattern of n equally spaced point slits with unit amplitude
// envelopes. The geometry reduces to a single phase phi per screen position,
// and the intensity is
//
//   I(phi) = sum_{j,k} rho_jk exp(i (j - k) phi),
//
// i.e. <v|rho|v> with v_j = exp(-i j phi). Over a full period its mean is
// tr(rho) = 1.

inline constexpr int kMinPatternPoints = 16;
inline constexpr int kDefaultPatternPoints = 4096;

struct PhasePattern {
  Index n = 0;
  int points = 0;
  std::vector<double> phi;        // 2 pi m / points, m = 0 .. points-1
  std::vector<double> intensity;  // same length as phi
};

/// Throws RangeError for points < kMinPatternPoints. Throws std::logic_error
/// if the imaginary residue of the Hermitian sum exceeds 1e-12.
PhasePattern pattern(const QuantonState& state, int points = kDefaultPatternPoints);

/// (I_max - I_min) / (I_max + I_min) over the sampled grid, negative samples
/// read as zero. For n = 2 this approximates 2 |rho_12|; for n > 2 it is
/// reported as-is and is not expected to match either coherence measure.
/// Throws DegeneratePatternError when the pattern is identically zero.
double fringe_visibility(const PhasePattern& pattern);

/// "phi,intensity" header plus one row per grid point (17 significant digits).
std::string to_csv(const PhasePattern& pattern);

}  // namespace duality

#endif  // DUALITY_INTERFERENCE_HPP
