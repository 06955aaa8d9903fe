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

#ifndef DUALITY_ENSEMBLES_HPP
#define DUALITY_ENSEMBLES_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "duality/state.hpp"

namespace duality {

// Random state supply.
//
// Every draw owns a private std::mt19937_64 stream. Sample i of a batch with
// seed s uses the stream seeded by derive_seed(s, i), so batches evaluated in
// parallel reproduce serial runs exactly. Gaussian variates come from the
// Box-Muller transform below rather than std::normal_distribution, whose
// output differs between standard libraries.

inline constexpr std::uint64_t kDefaultSeed = 20190424;
inline constexpr std::string_view kGeneratorIdentity = "mt19937_64+splitmix64-stream+box-muller/v1";

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// splitmix64(splitmix64(seed) + index)
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

class StreamRng {
 public:
  explicit StreamRng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on (0, 1].
  double uniform_positive() { return 1.0 - uniform(); }
  /// Exp(1).
  double exponential() { return -std::log(uniform_positive()); }
  /// Complex normal with independent real and imaginary parts, each N(0, 1/2).
  std::complex<double> complex_normal();

 private:
  std::mt19937_64 engine_;
};

/// Haar-random amplitudes: a normalised complex Gaussian vector.
PureState sample_pure(Index n, std::uint64_t seed);

/// G G^dagger / tr(G G^dagger) with G an n x rank complex Gaussian matrix.
/// rank = n gives the Hilbert-Schmidt ensemble, rank = 1 a pure state.
QuantonState sample_mixed(Index n, Index rank, std::uint64_t seed);

/// Populations drawn uniformly from the probability simplex, then mapped to
/// floor + (1 - n floor) p so that every entry is at least floor.
std::vector<double> sample_populations(Index n, std::uint64_t seed, double floor = 0.0);

enum class EnsembleKind { haar_pure, hilbert_schmidt_mixed, rank_k_mixed };

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::haar_pure;
  Index n = 2;
  Index rank = 1;  // rank_k_mixed only; hilbert_schmidt_mixed uses n
  std::uint64_t seed = kDefaultSeed;

  /// Throws DimensionError (n < 2) or RangeError (rank outside [1, n]).
  void check() const;
  Index effective_rank() const noexcept;
};

std::string_view to_string(EnsembleKind kind) noexcept;

/// Sample `index` of the batch described by spec.
QuantonState draw(const EnsembleSpec& spec, std::uint64_t index);

/// Writes `count` samples as JSON lines: the state document (amplitudes for
/// haar_pure, rho otherwise) plus "seed_index".
void write_jsonl(const EnsembleSpec& spec, std::uint64_t count, std::ostream& out);

enum class FamilyKind { dephase_path, depolarize_path, two_slit_bias };

struct FamilySpec {
  FamilyKind kind = FamilyKind::two_slit_bias;
  std::optional<QuantonState> base;  // required for dephase_path / depolarize_path
  int steps = 2;
};

struct FamilyPoint {
  double parameter = 0.0;
  QuantonState state;
};

/// States along the uniform grid parameter_i = i / (steps - 1):
/// dephase(base, parameter), depolarize(base, parameter) or the two-path pure
/// state (sqrt(a), sqrt(1 - a)) with a = parameter.
/// Throws RangeError for steps < 2 or a missing base.
std::vector<FamilyPoint> family_states(const FamilySpec& spec);

}  // namespace duality

#endif  // DUALITY_ENSEMBLES_HPP
