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

#include "cli/verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <ostream>

#include <fmt/format.h>

#include "duality/ensembles.hpp"
#include "duality/format.hpp"
#include "duality/interference.hpp"
#include "duality/measures.hpp"
#include "duality/parallel.hpp"
#include "duality/state_json.hpp"

namespace duality::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint64_t kPatternSampleCap = 10000;

/// Largest value of metric(i) over [0, count); NaN counts as a failure.
double worst_of(std::uint64_t count, const std::function<double(std::uint64_t)>& metric) {
  std::vector<double> values(count, -kInf);
  parallel_for(count, [&](std::size_t i) {
    const double v = metric(i);
    values[i] = std::isnan(v) ? kInf : v;
  });
  return values.empty() ? -kInf : *std::max_element(values.begin(), values.end());
}

QuantonState mixed_or_pure(Index n, std::uint64_t seed, std::uint64_t i) {
  const std::uint64_t s = derive_seed(seed, i);
  return i % 2 == 0 ? from_pure(sample_pure(n, s)) : sample_mixed(n, n, s);
}

QuantonState diagonal(const std::vector<double>& p) { return QuantonState::diagonal(p); }

struct Check {
  const char* module;
  const char* name;
  double limit;
  bool strict;
  Index only_n;  // 0 = every n
  bool pattern_based;
  std::function<double(Index n, std::uint64_t samples, std::uint64_t seed)> run;
};

// Dürr continuity: move towards the vertex of the most likely path by
// eps_m = 1e-2 / 2^m and require |dP| to shrink at least by half per step in
// the tail of the sequence.
double continuity_ratio(Index n, std::uint64_t seed) {
  const std::vector<double> p = sample_populations(n, seed, 1e-3);
  const auto k = static_cast<std::size_t>(std::max_element(p.begin(), p.end()) - p.begin());
  const double base = predictability(diagonal(p));
  std::vector<double> deltas;
  for (int m = 0; m <= 10; ++m) {
    const double eps = 1e-2 * std::ldexp(1.0, -m);
    std::vector<double> q = p;
    for (std::size_t j = 0; j < q.size(); ++j) q[j] += eps * ((j == k ? 1.0 : 0.0) - p[j]);
    deltas.push_back(std::abs(predictability(diagonal(q)) - base));
  }
  double worst = 0.0;
  for (std::size_t m = 5; m + 1 < deltas.size(); ++m) {
    if (deltas[m] == 0.0) {
      if (deltas[m + 1] != 0.0) return kInf;
      continue;
    }
    worst = std::max(worst, deltas[m + 1] / deltas[m]);
  }
  return worst;
}

std::vector<Check> build_checks() {
  std::vector<Check> c;

  // state-core
  c.push_back({"state", "pure_states_validate", 0.0, false, 0, false,
               [](Index n, std::uint64_t count, std::uint64_t seed) {
                 return worst_of(count, [&](std::uint64_t i) {
                   const PureState p = sample_pure(n, derive_seed(seed, i));
                   ComplexMatrix rho = p.amplitudes() * p.amplitudes().adjoint();
                   return validate(rho).passed ? 0.0 : 1.0;
                 });
               }});
  c.push_back({"state", "psd_principal_bound", 1e-12, false, 0, false,
               [](Index n, std::uint64_t count, std::uint64_t seed) {
                 return worst_of(count, [&](std::uint64_t i) {
                   const QuantonState s = mixed_or_pure(n, seed, i);
                   double w = -kInf;
                   for (Index j = 0; j < n; ++j)
                     for (Index k = 0; k < n; ++k)
                       if (j != k)
                         w = std::max(w, std::abs(s(j, k)) - std::sqrt(s.population(j) * s.population(k)));
                   return w;
                 });
               }});
  c.push_back({"state", "dephase_composition", 1e-15, false, 0, false,
               [](Index n, std::uint64_t count, std::uint64_t seed) {
                 return worst_of(count, [&](std::uint64_t i) {
                   const QuantonState s = mixed_or_pure(n, seed, i);
                   StreamRng rng(derive_seed(seed ^ 0xd1b54a32d192ed03ULL, i));
                   const double l1 = rng.uniform();
                   const double l2 = rng.uniform();
                   return (dephase(s, l1 * l2).rho() - dephase(dephase(s, l1), l2).rho())
                       .cwiseAbs()
                       .maxCoeff();
                 });
               }});
  c.push_back({"state", "depolarize_trace", 1e-14, false, 0, false,
               [](Index n, std::uint64_t count, std::uint64_t seed) {
                 return worst_of(count, [&](std::uint64_t i) {
                   const QuantonState s = mixed_or_pure(n, seed, i);
                   const double p = StreamRng(derive_seed(seed + 1, i)).uniform();
                   return std::abs(depolarize(s, p).rho().trace() - 1.0);
                 });
               }});

  // measures
  c.push_back({"measures", "duality_inequality", 1e-12, false, 0, false,
               [](Index n, std::uint64_t count, std::uint64_t seed) {
                 return worst_of(count, [&](std::uint64_t i) {
                   return -duality_report(sample_mixed(n, n, derive_seed(seed, i))).residual;
                 });
               }});
  c.push_back({"measures", "pure_state_saturation", 1e-12, false, 0, false,
               [](Index n, std::uint64_t count, std::uint64_t seed) {
                 return worst_of(count, [&](std::uint64_t i) {
                   return std::abs(duality_report(from_pure(sample_pure(n, derive_seed(seed, i)))).residual);
                 });
               }});
  c.push_back({"measures", "identity_form", kIdentityTolerance, false, 0, false,
               [](Index n, std::uint64_t count, std::uint64_t seed) {
                 return worst_of(count, [&](std::uint64_t i) {
                   return evaluate_duality(mixed_or_pure(n, seed, i)).identity_gap();
                 });
               }});
  c.push_back({"measures", "measure_ranges", 1e-12, false, 0, false,
               [](Index n, std::uint64_t count, std::uint64_t seed) {
                 const double floor = 1.0 / static_cast<double>(n);
                 return worst_of(count, [&](std::uint64_t i) {
                   const MeasureReport r = duality_report(mixed_or_pure(n, seed, i));
                   return std::max({-r.coherence, r.coherence - 1.0, -r.predictability,
                                    r.predictability - 1.0, -r.durr_visibility, r.durr_visibility - 1.0,
                                    floor - r.purity, r.purity - 1.0});
                 });
               }});
  c.push_back({"measures", "two_path_reduction", 1e-12, false, 2, false,
               [](Index n, std::uint64_t count, std::uint64_t seed) {
                 return worst_of(count, [&](std::uint64_t i) {
                   const QuantonState s = mixed_or_pure(n, seed, i);
                   const double v = 2.0 * std::abs(s(0, 1));
                   return std::max({std::abs(predictability(s) - gy_predictability(s)),
                                    std::abs(coherence(s) - v), std::abs(durr_visibility(s) - v)});
                 });
               }});
  c.push_back({"measures", "dephasing_keeps_predictability", 0.0, false, 0, false,
               [](Index n, std::uint64_t count, std::uint64_t seed) {
                 return worst_of(count, [&](std::uint64_t i) {
                   const QuantonState s = mixed_or_pure(n, seed, i);
                   const double lambda = StreamRng(derive_seed(seed + 1, i)).uniform();
                   return std::abs(predictability(dephase(s, lambda)) - predictability(s));
                 });
               }});
  c.push_back({"measures", "dephasing_scales_coherence", 1e-12, false, 0, false,
               [](Index n, std::uint64_t count, std::uint64_t seed) {
                 return worst_of(count, [&](std::uint64_t i) {
                   const QuantonState s = mixed_or_pure(n, seed, i);
                   const double lambda = StreamRng(derive_seed(seed + 1, i)).uniform();
                   return std::abs(coherence(dephase(s, lambda)) - lambda * coherence(s));
                 });
               }});
  c.push_back({"measures", "durr_1_continuity_halving", 0.52, false, 0, false,
               [](Index n, std::uint64_t count, std::uint64_t seed) {
                 return worst_of(count, [&](std::uint64_t i) { return continuity_ratio(n, derive_seed(seed, i)); });
               }});
  c.push_back({"measures", "durr_2_certain_path_is_maximum", 0.0, false, 0, false,
               [](Index n, std::uint64_t count, std::uint64_t seed) {
                 double worst = -kInf;
                 for (Index j = 0; j < n; ++j) {
                   std::vector<double> p(static_cast<std::size_t>(n), 0.0);
                   p[static_cast<std::size_t>(j)] = 1.0;
                   worst = std::max(worst, std::abs(1.0 - predictability(diagonal(p))));
                 }
                 return std::max(worst, worst_of(count, [&](std::uint64_t i) {
                                   return predictability(diagonal(sample_populations(n, derive_seed(seed, i)))) - 1.0;
                                 }));
               }});
  c.push_back({"measures", "durr_3_uniform_gives_zero", 0.0, false, 0, false,
               [](Index n, std::uint64_t, std::uint64_t) {
                 return predictability(QuantonState::maximally_mixed(n));
               }});
  c.push_back({"measures", "durr_3_nonuniform_positive", 0.0, true, 0, false,
               [](Index n, std::uint64_t count, std::uint64_t seed) {
                 return worst_of(count, [&](std::uint64_t i) {
                   std::vector<double> p;
                   if (i % 2 == 0) {
                     p = sample_populations(n, derive_seed(seed, i));
                   } else {
                     // Deviation from uniform of max-norm between 1e-6 and 1e-5.
                     StreamRng rng(derive_seed(seed, i));
                     std::vector<double> d(static_cast<std::size_t>(n));
                     for (double& v : d) v = rng.uniform();
                     const double mean = std::accumulate(d.begin(), d.end(), 0.0) / static_cast<double>(n);
                     double peak = 0.0;
                     for (double& v : d) {
                       v -= mean;
                       peak = std::max(peak, std::abs(v));
                     }
                     const double size = 1e-6 * (1.0 + 9.0 * rng.uniform());
                     p.assign(static_cast<std::size_t>(n), 1.0 / static_cast<double>(n));
                     for (std::size_t j = 0; j < p.size(); ++j) p[j] += d[j] * size / peak;
                   }
                   return -predictability(diagonal(p));
                 });
               }});
  c.push_back({"measures", "durr_4_equalizing_decreases", 0.0, true, 0, false,
               [](Index n, std::uint64_t count, std::uint64_t seed) {
                 return worst_of(count, [&](std::uint64_t i) {
                   std::vector<double> p = sample_populations(n, derive_seed(seed, i));
                   StreamRng rng(derive_seed(seed ^ 0x9e3779b97f4a7c15ULL, i));
                   const auto un = static_cast<std::uint64_t>(n);
                   auto j = static_cast<std::size_t>(rng.uniform() * static_cast<double>(un));
                   auto k = static_cast<std::size_t>(rng.uniform() * static_cast<double>(un - 1));
                   if (k >= j) ++k;
                   if (p[j] == p[k]) return -kInf;
                   if (p[j] > p[k]) std::swap(j, k);
                   const double before = predictability(diagonal(p));
                   const double delta = rng.uniform_positive() * 0.5 * (p[k] - p[j]);
                   p[j] += delta;
                   p[k] -= delta;
                   return predictability(diagonal(p)) - before;
                 });
               }});
  c.push_back({"measures", "coherence_below_cross_sum", 1e-12, false, 0, false,
               [](Index n, std::uint64_t count, std::uint64_t seed) {
                 return worst_of(count, [&](std::uint64_t i) {
                   const DualityTerms t = duality_terms(mixed_or_pure(n, seed, i));
                   return t.coherence_sum - t.cross_sum;
                 });
               }});
  c.push_back({"measures", "identical_detectors_match_predictability", 1e-14, false, 0, false,
               [](Index n, std::uint64_t count, std::uint64_t seed) {
                 const DetectorGram ones = DetectorGram::identical(n);
                 return worst_of(count, [&](std::uint64_t i) {
                   const PureState p = sample_pure(n, derive_seed(seed, i));
                   return std::abs(distinguishability(p, ones) - predictability(from_pure(p)));
                 });
               }});
  c.push_back({"measures", "orthogonal_detectors_give_one", 0.0, false, 0, false,
               [](Index n, std::uint64_t count, std::uint64_t seed) {
                 const DetectorGram eye = DetectorGram::orthogonal(n);
                 return worst_of(count, [&](std::uint64_t i) {
                   return std::abs(1.0 - distinguishability(sample_pure(n, derive_seed(seed, i)), eye));
                 });
               }});
  c.push_back({"measures", "three_slit_forms", 1e-14, false, 3, false,
               [](Index n, std::uint64_t count, std::uint64_t seed) {
                 return worst_of(count, [&](std::uint64_t i) {
                   const QuantonState s = mixed_or_pure(n, seed, i);
                   const ThreeSlitForms f = three_slit_forms(s);
                   return std::max(std::abs(f.coherence - coherence(s)),
                                   std::abs(f.predictability - predictability(s)));
                 });
               }});

  // ensembles
  c.push_back({"ensembles", "generated_states_validate", 0.0, false, 0, false,
               [](Index n, std::uint64_t count, std::uint64_t seed) {
                 return worst_of(count, [&](std::uint64_t i) {
                   const EnsembleKind kinds[] = {EnsembleKind::haar_pure, EnsembleKind::hilbert_schmidt_mixed,
                                                 EnsembleKind::rank_k_mixed};
                   const EnsembleSpec spec{kinds[i % 3], n, 1 + static_cast<Index>(i % static_cast<std::uint64_t>(n)), seed};
                   return validate(draw(spec, i).rho()).passed ? 0.0 : 1.0;
                 });
               }});
  c.push_back({"ensembles", "generation_deterministic", 0.0, false, 0, false,
               [](Index n, std::uint64_t count, std::uint64_t seed) {
                 const EnsembleSpec spec{EnsembleKind::hilbert_schmidt_mixed, n, n, seed};
                 return worst_of(count, [&](std::uint64_t i) {
                   return to_json(draw(spec, i)).dump() == to_json(draw(spec, i)).dump() ? 0.0 : 1.0;
                 });
               }});
  c.push_back({"ensembles", "two_slit_bias_quarter_circle", 1e-12, false, 2, false,
               [](Index, std::uint64_t, std::uint64_t) {
                 double worst = 0.0;
                 for (const FamilyPoint& fp : family_states({FamilyKind::two_slit_bias, std::nullopt, 1000})) {
                   worst = std::max(worst, std::abs(duality_report(fp.state).residual));
                 }
                 return worst;
               }});

  // interference
  c.push_back({"interference", "pattern_nonnegative", 1e-12, false, 0, true,
               [](Index n, std::uint64_t count, std::uint64_t seed) {
                 return worst_of(count, [&](std::uint64_t i) {
                   const PhasePattern p = pattern(mixed_or_pure(n, seed, i));
                   return -*std::min_element(p.intensity.begin(), p.intensity.end());
                 });
               }});
  c.push_back({"interference", "pattern_unit_mean", 1e-12, false, 0, true,
               [](Index n, std::uint64_t count, std::uint64_t seed) {
                 return worst_of(count, [&](std::uint64_t i) {
                   const PhasePattern p = pattern(mixed_or_pure(n, seed, i));
                   const double mean = std::accumulate(p.intensity.begin(), p.intensity.end(), 0.0) /
                                       static_cast<double>(p.points);
                   return std::abs(mean - 1.0);
                 });
               }});
  c.push_back({"interference", "pattern_peak_bound", 1e-12, false, 0, true,
               [](Index n, std::uint64_t count, std::uint64_t seed) {
                 return worst_of(count, [&](std::uint64_t i) {
                   const PhasePattern p = pattern(mixed_or_pure(n, seed, i));
                   return *std::max_element(p.intensity.begin(), p.intensity.end()) - static_cast<double>(n);
                 });
               }});
  c.push_back({"interference", "fringe_matches_coherence", 1e-3, false, 2, true,
               [](Index n, std::uint64_t count, std::uint64_t seed) {
                 return worst_of(count, [&](std::uint64_t i) {
                   const QuantonState s = mixed_or_pure(n, seed, i);
                   return std::abs(fringe_visibility(pattern(s)) - coherence(s));
                 });
               }});
  c.push_back({"interference", "fringe_dephasing_linearity", 2e-3, false, 2, true,
               [](Index n, std::uint64_t count, std::uint64_t seed) {
                 return worst_of(count, [&](std::uint64_t i) {
                   const QuantonState s = mixed_or_pure(n, seed, i);
                   const double lambda = StreamRng(derive_seed(seed + 1, i)).uniform();
                   return std::abs(fringe_visibility(pattern(dephase(s, lambda))) -
                                   lambda * fringe_visibility(pattern(s)));
                 });
               }});
  return c;
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& options, std::ostream* progress) {
  const std::vector<Check> checks = build_checks();
  std::vector<CheckResult> results;
  for (std::size_t id = 0; id < checks.size(); ++id) {
    const Check& check = checks[id];
    for (Index n = 2; n <= options.n_max; ++n) {
      if (check.only_n != 0 && check.only_n != n) continue;
      const std::uint64_t trials =
          check.pattern_based ? std::min(options.samples, kPatternSampleCap) : options.samples;
      const std::uint64_t seed = derive_seed(derive_seed(options.seed, id), static_cast<std::uint64_t>(n));

      CheckResult r{check.module, check.name, n, trials, 0.0, check.limit, check.strict, false};
      r.worst = check.run(n, trials, seed);
      r.passed = check.strict ? r.worst < r.limit : r.worst <= r.limit;
      if (progress != nullptr) {
        *progress << fmt::format("verify: {:<42} n={:<3} {}\n", r.name, n, r.passed ? "pass" : "FAIL");
      }
      results.push_back(std::move(r));
    }
  }
  return results;
}

nlohmann::json to_json(const CheckResult& r) {
  return {{"module", r.module}, {"check", r.name},   {"n", r.n},
          {"trials", r.trials}, {"worst", r.worst},  {"limit", r.limit},
          {"relation", r.strict ? "<" : "<="},       {"result", r.passed ? "pass" : "fail"}};
}

std::string format_table(const std::vector<CheckResult>& results) {
  std::string out = fmt::format("{:<13} {:<42} {:>3} {:>8} {:>24} {:>2} {:<8} {}\n", "module", "check", "n",
                                "trials", "worst", "", "limit", "result");
  std::size_t passed = 0;
  for (const CheckResult& r : results) {
    passed += r.passed ? 1 : 0;
    out += fmt::format("{:<13} {:<42} {:>3} {:>8} {:>24} {:>2} {:<8} {}\n", r.module, r.name, r.n, r.trials,
                       format_double(r.worst), r.strict ? "<" : "<=", fmt::format("{:g}", r.limit),
                       r.passed ? "PASS" : "FAIL");
  }
  out += fmt::format("summary: {}/{} checks passed\n", passed, results.size());
  return out;
}

}  // namespace duality::cli
