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

#include "cli/app.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "cli/metadata.hpp"
#include "cli/verify_suite.hpp"
#include "duality/ensembles.hpp"
#include "duality/format.hpp"
#include "duality/interference.hpp"
#include "duality/measures.hpp"
#include "duality/parallel.hpp"
#include "duality/state_json.hpp"

namespace duality::cli {

namespace {

constexpr double kResidualTolerance = 1e-12;
constexpr std::uint64_t kProgressBlock = 10000;

/// Unwinds a command with a fixed exit code; the message goes to stderr.
struct Exit {
  int code;
  std::string message;
};

[[noreturn]] void flag_error(const std::string& message) { throw Exit{kFlagError, message}; }

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) flag_error("cannot write output file " + path);
  file << content;
  if (!file.flush()) flag_error("failed writing output file " + path);
}

ParsedState load_state(const std::string& path, bool renormalize, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kParseFailure, "cannot open state file " + path};
  std::ostringstream text;
  text << in.rdbuf();

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.str());
  } catch (const nlohmann::json::exception& e) {
    throw Exit{kParseFailure, path + ": invalid JSON: " + e.what()};
  }
  const StateOptions options{.renormalize = renormalize};
  try {
    return parse_state(doc, options);
  } catch (const ParseError& e) {
    throw Exit{kParseFailure, path + ": " + e.what()};
  } catch (const ValidationError& e) {
    err << to_json(e.report()).dump(2) << '\n';
    throw Exit{kInvalidState, path + ": " + e.what()};
  } catch (const NormalizationError& e) {
    err << to_json(validate(parse_matrix(doc))).dump(2) << '\n';
    throw Exit{kInvalidState, path + ": " + e.what()};
  } catch (const DimensionError& e) {
    throw Exit{kInvalidState, path + ": " + e.what()};
  }
}

// --- measures ---------------------------------------------------------------

struct MeasuresArgs {
  std::string state_file;
  bool renormalize = false;
  bool csv = false;
  bool json = false;
};

int cmd_measures(const MeasuresArgs& a, const std::vector<std::string>& argv, std::ostream& out,
                 std::ostream& err) {
  const ParsedState parsed = load_state(a.state_file, a.renormalize, err);
  const MeasureReport report = duality_report(parsed.density);
  const RunMetadata meta = make_metadata(argv, {});
  if (a.csv) {
    out << meta.to_csv_comments() << csv_header() << '\n' << to_csv_row(report) << '\n';
  } else {
    nlohmann::json doc = to_json(report);
    doc["metadata"] = meta.to_json();
    out << doc.dump(2) << '\n';
  }
  return kOk;
}

// --- sweep ------------------------------------------------------------------

struct SweepArgs {
  std::string family;
  Index n = 2;
  int steps = 11;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::string base;
  bool random_base = false;
};

int cmd_sweep(const SweepArgs& a, const std::vector<std::string>& argv, std::ostream& out,
              std::ostream& err) {
  if (a.steps < 2) flag_error("--steps must be at least 2");
  if (a.n < kMinPaths) flag_error("--n must be at least 2");
  if (!a.base.empty() && a.random_base) flag_error("--base and --random-base are exclusive");

  FamilySpec spec;
  spec.steps = a.steps;
  if (a.family == "two-slit-bias") {
    if (a.n != 2) flag_error("two-slit-bias is a two-path family; use --n 2");
    if (!a.base.empty() || a.random_base) flag_error("two-slit-bias takes no base state");
    spec.kind = FamilyKind::two_slit_bias;
  } else {
    spec.kind = a.family == "dephase" ? FamilyKind::dephase_path : FamilyKind::depolarize_path;
    if (!a.base.empty()) {
      spec.base = load_state(a.base, false, err).density;
      if (spec.base->paths() != a.n) flag_error("--n does not match the base state");
    } else if (a.random_base) {
      spec.base = from_pure(sample_pure(a.n, a.seed));
    } else {
      spec.base = from_pure(PureState::equal_superposition(a.n));
    }
  }

  std::string csv = make_metadata(argv, {a.seed}).to_csv_comments();
  csv += "parameter," + csv_header() + '\n';
  for (const FamilyPoint& point : family_states(spec)) {
    csv += format_double(point.parameter) + ',' + to_csv_row(duality_report(point.state)) + '\n';
  }
  emit(a.out, csv, out);
  return kOk;
}

// --- sample -----------------------------------------------------------------

struct SampleArgs {
  Index n = 2;
  std::uint64_t count = 10000;
  std::string ensemble = "hs";
  std::optional<Index> rank;
  std::uint64_t seed = kDefaultSeed;
  bool check_duality = false;
  std::string dump;
};

struct SampleRecord {
  double residual = 0.0;
  double identity_gap = 0.0;
};

int cmd_sample(const SampleArgs& a, const std::vector<std::string>& argv, std::ostream& out,
               std::ostream& err) {
  if (a.n < kMinPaths) flag_error("--n must be at least 2");
  if (a.count < 1) flag_error("--count must be at least 1");

  EnsembleSpec spec;
  spec.n = a.n;
  spec.seed = a.seed;
  if (a.ensemble == "pure") {
    if (a.rank) flag_error("--rank does not apply to the pure ensemble");
    spec.kind = EnsembleKind::haar_pure;
    spec.rank = 1;
  } else if (a.ensemble == "hs") {
    if (a.rank && *a.rank != a.n) flag_error("the hs ensemble has rank n; use rank-k for other ranks");
    spec.kind = EnsembleKind::hilbert_schmidt_mixed;
    spec.rank = a.n;
  } else {
    if (!a.rank) flag_error("the rank-k ensemble needs --rank");
    if (*a.rank < 1 || *a.rank > a.n) flag_error("--rank must lie in [1, n]");
    spec.kind = EnsembleKind::rank_k_mixed;
    spec.rank = *a.rank;
  }
  const bool pure_like = spec.effective_rank() == 1;

  if (!a.dump.empty()) {
    std::ofstream dump(a.dump, std::ios::binary | std::ios::trunc);
    if (!dump) flag_error("cannot write dump file " + a.dump);
    write_jsonl(spec, a.count, dump);
  }

  std::vector<SampleRecord> records(a.count);
  const bool chatty = a.count > kProgressBlock;
  for (std::uint64_t begin = 0; begin < a.count; begin += kProgressBlock) {
    const std::uint64_t end = std::min(a.count, begin + kProgressBlock);
    parallel_for(end - begin, [&](std::size_t offset) {
      const DualityEvaluation e = evaluate_duality(draw(spec, begin + offset));
      records[begin + offset] = {e.report.residual, e.identity_gap()};
    });
    if (chatty) err << fmt::format("sample: {}/{} states\n", end, a.count);
  }

  double min_r = records[0].residual, max_r = min_r, max_abs = 0.0, max_gap = 0.0, sum = 0.0;
  std::uint64_t inequality = 0, saturation = 0, identity = 0, worst = 0;
  for (std::uint64_t i = 0; i < a.count; ++i) {
    const SampleRecord& r = records[i];
    min_r = std::min(min_r, r.residual);
    max_r = std::max(max_r, r.residual);
    max_abs = std::max(max_abs, std::abs(r.residual));
    max_gap = std::max(max_gap, r.identity_gap);
    sum += r.residual;
    if (!(r.residual >= -kResidualTolerance)) ++inequality;
    if (!(std::abs(r.residual) <= kResidualTolerance)) ++saturation;
    if (!(r.identity_gap <= kIdentityTolerance)) ++identity;
    const SampleRecord& w = records[worst];
    if (pure_like ? std::abs(r.residual) > std::abs(w.residual) : r.residual < w.residual) worst = i;
  }
  std::uint64_t violations = inequality;
  if (a.check_duality) violations += identity + (pure_like ? saturation : 0);

  nlohmann::json worst_state = pure_like && spec.kind == EnsembleKind::haar_pure
                                   ? to_json(sample_pure(spec.n, derive_seed(spec.seed, worst)))
                                   : to_json(draw(spec, worst));
  worst_state["seed_index"] = worst;

  nlohmann::json doc;
  doc["metadata"] = make_metadata(argv, {a.seed}).to_json();
  doc["ensemble"] = a.ensemble;
  doc["kind"] = std::string(to_string(spec.kind));
  doc["n"] = spec.n;
  doc["rank"] = spec.effective_rank();
  doc["count"] = a.count;
  doc["check_duality"] = a.check_duality;
  doc["residual"] = {{"min", min_r}, {"max", max_r}, {"mean", sum / static_cast<double>(a.count)}, {"max_abs", max_abs}};
  doc["identity_max_gap"] = max_gap;
  nlohmann::json breakdown{{"inequality", inequality}};
  if (a.check_duality) {
    breakdown["identity"] = identity;
    if (pure_like) breakdown["saturation"] = saturation;
  }
  doc["violation_breakdown"] = breakdown;
  doc["violations"] = violations;
  doc["worst"] = {{"seed_index", worst}, {"residual", records[worst].residual}, {"state", worst_state}};
  out << doc.dump(2) << '\n';
  return violations == 0 ? kOk : kVerificationFailure;
}

// --- pattern ----------------------------------------------------------------

struct PatternArgs {
  std::string state_file;
  int points = kDefaultPatternPoints;
  std::string out;
  bool renormalize = false;
};

int cmd_pattern(const PatternArgs& a, const std::vector<std::string>& argv, std::ostream& out,
                std::ostream& err) {
  if (a.points < kMinPatternPoints) {
    flag_error("--points must be at least " + std::to_string(kMinPatternPoints));
  }
  const ParsedState parsed = load_state(a.state_file, a.renormalize, err);
  const PhasePattern p = pattern(parsed.density, a.points);
  emit(a.out, make_metadata(argv, {}).to_csv_comments() + to_csv(p), out);
  err << "fringe_visibility=" << format_double(fringe_visibility(p)) << " n=" << p.n
      << " points=" << p.points;
  if (p.n > 2) err << " (n > 2: not comparable to coherence)";
  err << '\n';
  return kOk;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  Index n_max = 8;
  std::uint64_t samples = 1000;
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
};

int cmd_verify(const VerifyArgs& a, const std::vector<std::string>& argv, std::ostream& out,
               std::ostream& err) {
  if (a.n_max < kMinPaths) flag_error("--n-max must be at least 2");
  if (a.samples < 1) flag_error("--samples must be at least 1");
  const std::vector<CheckResult> results = run_verify({a.n_max, a.samples, a.seed}, &err);
  const bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
  const RunMetadata meta = make_metadata(argv, {a.seed});
  if (a.json) {
    nlohmann::json doc;
    doc["metadata"] = meta.to_json();
    doc["checks"] = nlohmann::json::array();
    for (const CheckResult& r : results) doc["checks"].push_back(to_json(r));
    doc["passed"] = ok;
    out << doc.dump(2) << '\n';
  } else {
    out << meta.to_csv_comments() << format_table(results);
  }
  return ok ? kOk : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wave-particle duality measures for n-path interference", "duality-lab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version()));

  MeasuresArgs measures;
  auto* m = app.add_subcommand("measures", "Coherence, predictability and duality report for one state");
  m->add_option("state_file,--state-file", measures.state_file, "State JSON file")->required();
  m->add_flag("--renormalize", measures.renormalize, "Divide by the trace instead of rejecting");
  auto* m_csv = m->add_flag("--csv", measures.csv, "Emit one CSV row");
  m->add_flag("--json", measures.json, "Emit JSON (default)")->excludes(m_csv);

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep", "Measures along a one-parameter family of states");
  s->add_option("--family", sweep.family, "dephase | depolarize | two-slit-bias")
      ->required()
      ->check(CLI::IsMember({"dephase", "depolarize", "two-slit-bias"}));
  s->add_option("-n,--n", sweep.n, "Number of paths")->capture_default_str();
  s->add_option("--steps", sweep.steps, "Grid points on [0, 1]")->capture_default_str();
  s->add_option("--seed", sweep.seed, "Seed for --random-base")->capture_default_str();
  s->add_option("--out", sweep.out, "Output CSV (stdout when omitted)");
  s->add_option("--base", sweep.base, "Base state file for dephase/depolarize");
  s->add_flag("--random-base,--random_base", sweep.random_base, "Haar-random pure base state from --seed");

  SampleArgs sample;
  auto* sa = app.add_subcommand("sample", "Monte-Carlo check of the duality relation");
  sa->add_option("-n,--n", sample.n, "Number of paths")->required();
  sa->add_option("--count", sample.count, "Number of states")->capture_default_str();
  sa->add_option("--ensemble", sample.ensemble, "pure | hs | rank-k")
      ->check(CLI::IsMember({"pure", "hs", "rank-k"}))
      ->capture_default_str();
  sa->add_option("--rank", sample.rank, "Rank for rank-k (hs implies rank n)");
  sa->add_option("--seed", sample.seed, "Batch seed")->capture_default_str();
  sa->add_flag("--check-duality,--check_duality", sample.check_duality,
               "Also require the identity form and, for pure states, saturation");
  sa->add_option("--dump", sample.dump, "Write the sampled states as JSON lines");

  PatternArgs pat;
  auto* p = app.add_subcommand("pattern", "Far-field n-slit intensity over one fringe period");
  p->add_option("state_file,--state-file", pat.state_file, "State JSON file")->required();
  p->add_option("--points", pat.points, "Grid size")->capture_default_str();
  p->add_option("--out", pat.out, "Output CSV (stdout when omitted)");
  p->add_flag("--renormalize", pat.renormalize, "Divide by the trace instead of rejecting");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run every library invariant over n = 2 .. n_max");
  v->add_option("--n-max,--n_max", verify.n_max, "Largest path count")->capture_default_str();
  v->add_option("--samples", verify.samples, "Random states per check and n")->capture_default_str();
  v->add_option("--seed", verify.seed, "Suite seed")->capture_default_str();
  v->add_flag("--json", verify.json, "Emit JSON instead of a table");

  // CLI11 consumes arguments from the back; args[0] is the program name.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    app.exit(e, err, err);
    return kFlagError;
  }

  try {
    if (m->parsed()) return cmd_measures(measures, args, out, err);
    if (s->parsed()) return cmd_sweep(sweep, args, out, err);
    if (sa->parsed()) return cmd_sample(sample, args, out, err);
    if (p->parsed()) return cmd_pattern(pat, args, out, err);
    if (v->parsed()) return cmd_verify(verify, args, out, err);
  } catch (const Exit& e) {
    err << "duality-lab: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    err << "duality-lab: internal error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kFlagError;
}

}  // namespace duality::cli
