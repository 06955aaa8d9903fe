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

#include "duality/ensembles.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include "duality/state_json.hpp"

namespace duality {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return splitmix64(splitmix64(seed) + index);
}

double StreamRng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::complex<double> StreamRng::complex_normal() {
  // |z|^2 ~ Exp(1) and a uniform phase give E|z|^2 = 1, i.e. variance 1/2 per part.
  const double radius = std::sqrt(exponential());
  const double angle = 2.0 * std::numbers::pi * uniform();
  return std::polar(radius, angle);
}

PureState sample_pure(Index n, std::uint64_t seed) {
  if (n < kMinPaths) throw DimensionError("need at least 2 paths");
  StreamRng rng(seed);
  ComplexVector c(n);
  for (Index j = 0; j < n; ++j) c(j) = rng.complex_normal();
  return PureState(c / c.norm(), StateOptions{.renormalize = true});
}

QuantonState sample_mixed(Index n, Index rank, std::uint64_t seed) {
  if (n < kMinPaths) throw DimensionError("need at least 2 paths");
  if (rank < 1 || rank > n) {
    throw RangeError("rank must lie in [1, n], got " + std::to_string(rank));
  }
  StreamRng rng(seed);
  ComplexMatrix g(n, rank);
  for (Index j = 0; j < n; ++j)
    for (Index k = 0; k < rank; ++k) g(j, k) = rng.complex_normal();
  ComplexMatrix rho = g * g.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  rho.diagonal() = rho.diagonal().real().cast<std::complex<double>>();
  rho /= rho.trace().real();
  return QuantonState(std::move(rho));
}

std::vector<double> sample_populations(Index n, std::uint64_t seed, double floor) {
  if (n < kMinPaths) throw DimensionError("need at least 2 paths");
  const double scale = 1.0 - static_cast<double>(n) * floor;
  if (floor < 0.0 || scale <= 0.0) throw RangeError("population floor too large for n");
  StreamRng rng(seed);
  std::vector<double> p(static_cast<std::size_t>(n));
  double total = 0.0;
  for (double& v : p) {
    v = rng.exponential();
    total += v;
  }
  for (double& v : p) v = floor + scale * (v / total);
  return p;
}

void EnsembleSpec::check() const {
  if (n < kMinPaths) throw DimensionError("need at least 2 paths");
  if (kind == EnsembleKind::rank_k_mixed && (rank < 1 || rank > n)) {
    throw RangeError("rank must lie in [1, n], got " + std::to_string(rank));
  }
}

Index EnsembleSpec::effective_rank() const noexcept {
  switch (kind) {
    case EnsembleKind::haar_pure: return 1;
    case EnsembleKind::hilbert_schmidt_mixed: return n;
    case EnsembleKind::rank_k_mixed: return rank;
  }
  return rank;
}

std::string_view to_string(EnsembleKind kind) noexcept {
  switch (kind) {
    case EnsembleKind::haar_pure: return "haar_pure";
    case EnsembleKind::hilbert_schmidt_mixed: return "hilbert_schmidt_mixed";
    case EnsembleKind::rank_k_mixed: return "rank_k_mixed";
  }
  return "unknown";
}

QuantonState draw(const EnsembleSpec& spec, std::uint64_t index) {
  spec.check();
  const std::uint64_t seed = derive_seed(spec.seed, index);
  if (spec.kind == EnsembleKind::haar_pure) return from_pure(sample_pure(spec.n, seed));
  return sample_mixed(spec.n, spec.effective_rank(), seed);
}

void write_jsonl(const EnsembleSpec& spec, std::uint64_t count, std::ostream& out) {
  spec.check();
  for (std::uint64_t i = 0; i < count; ++i) {
    nlohmann::json doc = spec.kind == EnsembleKind::haar_pure
                             ? to_json(sample_pure(spec.n, derive_seed(spec.seed, i)))
                             : to_json(draw(spec, i));
    doc["seed_index"] = i;
    out << doc.dump() << '\n';
  }
}

std::vector<FamilyPoint> family_states(const FamilySpec& spec) {
  if (spec.steps < 2) throw RangeError("a family needs at least 2 steps");
  if (spec.kind != FamilyKind::two_slit_bias && !spec.base) {
    throw RangeError("dephasing and depolarizing families need a base state");
  }
  std::vector<FamilyPoint> out;
  out.reserve(static_cast<std::size_t>(spec.steps));
  for (int i = 0; i < spec.steps; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(spec.steps - 1);
    switch (spec.kind) {
      case FamilyKind::dephase_path:
        out.push_back({t, dephase(*spec.base, t)});
        break;
      case FamilyKind::depolarize_path:
        out.push_back({t, depolarize(*spec.base, t)});
        break;
      case FamilyKind::two_slit_bias: {
        ComplexVector c(2);
        c << std::sqrt(t), std::sqrt(1.0 - t);
        out.push_back({t, from_pure(PureState(c))});
        break;
      }
    }
  }
  return out;
}

}  // namespace duality
