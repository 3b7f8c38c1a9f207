// lprg: challenges, realizers, verification, oracle samples and experiments.
// Exit codes: 0 success, 1 verification failure, 2 configuration error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lprg/io.hpp"
#include "lprg/realizers.hpp"
#include "lprg/reduction.hpp"
#include "lprg/verify.hpp"

namespace {

using namespace lprg;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kConfig = 2;

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

ChallengeMode parse_mode(const std::string& mode) {
  if (mode == "pseudo") return ChallengeMode::Pseudorandom;
  if (mode == "random") return ChallengeMode::Random;
  throw ConfigError("mode must be pseudo or random");
}

// --- challenge -------------------------------------------------------------

struct ChallengeArgs {
  std::size_t n = 0, k = 0, m = 0;
  std::string pred, mode = "pseudo", out;
  std::uint64_t seed = 0;
  bool blind = false;
};

ChallengeSequence generate_challenge(std::size_t n, std::size_t k, std::size_t m,
                                     const Predicate& p, ChallengeMode mode, std::uint64_t seed) {
  if (p.arity() != k) throw ConfigError("predicate arity differs from k");
  if (k < 1 || k > n) throw ConfigError("challenge needs 1 <= k <= n");
  const Rng master(seed);
  Rng graph_rng = master.split(0);
  Rng label_rng = master.split(1);
  return make_challenge(p, sample_hypergraph(n, m, k, graph_rng), mode, label_rng);
}

int run_challenge(const ChallengeArgs& a) {
  const Predicate p = parse_predicate_spec(a.pred);
  const ChallengeMode mode = parse_mode(a.mode);
  const auto c = generate_challenge(a.n, a.k, a.m, p, mode, a.seed);
  json params = {{"n", a.n}, {"k", a.k}, {"m", a.m}, {"pred", a.pred}, {"mode", a.mode}};
  json meta = make_meta("challenge", a.seed, params);
  if (a.blind) {
    meta.erase("seed");
    meta["params"].erase("mode");
  }
  emit(a.out, dump(challenge_to_json(c, p, meta, a.blind)));
  return kOk;
}

// --- realize / verify ------------------------------------------------------

struct RealizeArgs {
  std::string kind, pred, x, out;
  std::size_t n = 0, k = 0, l = 0, d = 0, slice_count = 1;
  std::optional<std::uint64_t> seed;
};

RealizerSpec spec_from_args(const RealizeArgs& a, bool need_seed) {
  RealizerSpec spec;
  spec.kind = parse_realizer_kind(a.kind);
  spec.n = a.n;
  spec.k = a.k;
  spec.l = a.l;
  spec.d = a.d;
  spec.slice_count = a.slice_count;
  if (spec.kind == RealizerKind::Intersection || spec.kind == RealizerKind::Nn2Int) {
    spec.predicate = a.pred.empty() ? make_xormaj(a.k, a.l) : parse_predicate_spec(a.pred);
  } else {
    if (a.pred.empty()) throw ConfigError("--pred is required for " + a.kind);
    spec.predicate = parse_predicate_spec(a.pred);
  }
  if (spec.n < 1) throw ConfigError("--n must be positive");
  if (!a.x.empty()) {
    spec.x = hex_to_bits(a.x, spec.n);
  } else if (a.seed) {
    Rng rng(*a.seed);
    spec.x = random_bits(spec.n, rng);
  } else if (need_seed) {
    throw ConfigError("pass the seed vector with --x or sample it with --seed");
  }
  return spec;
}

json spec_params(const RealizerSpec& spec) {
  return {{"kind", to_string(spec.kind)}, {"n", spec.n}, {"k", spec.k}, {"l", spec.l},
          {"d", spec.oracle().input_dim()}, {"slice_count", spec.slice_count},
          {"pred", predicate_spec(spec.predicate)}, {"x", bits_to_hex(spec.x)}};
}

RealizerSpec spec_from_params(const json& params) {
  RealizerSpec spec;
  spec.kind = parse_realizer_kind(params.at("kind").get<std::string>());
  spec.n = params.at("n").get<std::size_t>();
  spec.k = params.at("k").get<std::size_t>();
  spec.l = params.at("l").get<std::size_t>();
  spec.d = params.at("d").get<std::size_t>();
  spec.slice_count = params.at("slice_count").get<std::size_t>();
  spec.predicate = parse_predicate_spec(params.at("pred").get<std::string>());
  spec.x = hex_to_bits(params.at("x").get<std::string>(), spec.n);
  return spec;
}

json audit(const Hypothesis& h, const RealizerSpec& spec) {
  json out = {{"kind", h.kind()}, {"dim", h.dim()}};
  if (const auto* f = h.get<DnfFormula>()) {
    out["terms"] = f->term_count();
  } else if (const auto* c = h.get<BooleanCircuit>()) {
    out["gates"] = c->gate_count();
    out["depth"] = c->depth();
  } else if (const auto* g = h.get<HalfspaceIntersection>()) {
    out["halfspaces"] = g->halfspace_count();
  } else if (const auto* ni = h.get<ReluNetwork<std::int64_t>>()) {
    out["depth"] = ni->depth();
    out["hidden"] = ni->hidden_count();
    out["max_abs_weight"] = ni->max_abs_weight();
  } else if (const auto* nr = h.get<ReluNetwork<double>>()) {
    out["depth"] = nr->depth();
    out["hidden"] = nr->hidden_count();
    out["max_abs_weight"] = nr->max_abs_weight();
  } else if (const auto* a = h.get<Dfa>()) {
    out["states"] = a->size();
    out["state_bound"] = dfa_full_state_count(spec.n, spec.k, spec.slice_count);
  } else if (const auto* p = h.get<Gf2Polynomial>()) {
    out["sparsity"] = p->sparsity();
  }
  return out;
}

std::string audit_line(const json& a) {
  std::string line;
  for (const auto& [key, value] : a.items()) {
    if (!line.empty()) line += ' ';
    line += key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
  }
  return line;
}

int run_realize(const RealizeArgs& a) {
  const RealizerSpec spec = spec_from_args(a, true);
  const Hypothesis h = build_realizer(spec);
  const json a_json = audit(h, spec);
  json file = {{"meta", make_meta("realize", a.seed.value_or(0), spec_params(spec))},
               {"hypothesis", hypothesis_to_json(h)},
               {"audit", a_json}};
  if (!a.seed) file["meta"].erase("seed");
  if (a.out.empty() || a.out == "-") {
    std::cout << dump(file);
  } else {
    write_text_file(a.out, dump(file));
    std::cout << audit_line(a_json) << '\n';
  }
  return kOk;
}

struct VerifyArgs {
  RealizeArgs realize;
  std::string hypothesis, out;
  bool monte_carlo = false, all_seeds = false;
  std::size_t samples = 10000;
  std::uint64_t mc_seed = 1;
};

int run_verify(const VerifyArgs& a) {
  VerifyOptions options;
  options.monte_carlo = a.monte_carlo;
  options.samples = a.samples;
  options.seed = a.mc_seed;
  VerifyReport report;
  json params;
  if (!a.hypothesis.empty()) {
    const json file = read_json_file(a.hypothesis);
    const RealizerSpec spec = spec_from_params(file.at("meta").at("params"));
    const Hypothesis h = hypothesis_from_json(file.at("hypothesis"));
    report = verify_realizer(h, spec, options);
    params = spec_params(spec);
    params["hypothesis"] = a.hypothesis;
  } else if (a.all_seeds) {
    RealizerSpec spec = spec_from_args(a.realize, false);
    if (spec.n > 16) throw ConfigError("--all-seeds needs n <= 16");
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << spec.n); ++v) {
      spec.x = index_to_bits(v, spec.n);
      report.merge(verify_realizer(build_realizer(spec), spec, options));
    }
    params = spec_params(spec);
    params.erase("x");
    params["seeds"] = std::uint64_t{1} << spec.n;
  } else {
    const RealizerSpec spec = spec_from_args(a.realize, true);
    report = verify_realizer(build_realizer(spec), spec, options);
    params = spec_params(spec);
  }
  if (a.monte_carlo) params["samples"] = a.samples;
  json result = {{"meta", make_meta("verify", a.mc_seed, params)},
                 {"mode", report.mode},
                 {"checked", report.checked},
                 {"mismatches", report.mismatches},
                 {"max_squared_error", report.max_error},
                 {"first_mismatches", report.first_mismatches}};
  if (!a.out.empty()) write_text_file(a.out, dump(result));
  std::cout << report.mode << ": checked=" << report.checked
            << " mismatches=" << report.mismatches << '\n';
  for (const auto& m : report.first_mismatches) std::cout << "  " << m << '\n';
  return report.mismatches == 0 ? kOk : kMismatch;
}

// --- oracle configuration shared by sample and experiment -------------------

struct OracleArgs {
  std::string flavor = "plain", pred;
  std::size_t n = 0, k = 0, m = 0, d = 0, slice_count = 1, split = 1;
  std::uint64_t seed = 0;
};

OracleConfig oracle_from_args(const OracleArgs& a) {
  OracleConfig c;
  c.flavor = parse_oracle_flavor(a.flavor);
  c.n = a.n;
  c.k = a.k;
  c.d = a.d;
  c.slice_count = a.slice_count;
  c.split = a.split;
  c.validate();
  return c;
}

json oracle_params(const OracleArgs& a) {
  return {{"oracle", a.flavor}, {"n", a.n}, {"k", a.k}, {"m", a.m}, {"d", a.d},
          {"slice_count", a.slice_count}, {"split", a.split}, {"pred", a.pred}};
}

void add_oracle_options(CLI::App* cmd, OracleArgs& a) {
  cmd->add_option("--oracle", a.flavor,
                  "plain | plain-monomials | bernoulli | uniform-compressed | gaussian | dfa-uniform");
  cmd->add_option("--n", a.n, "seed length")->required();
  cmd->add_option("--k", a.k, "predicate arity")->required();
  cmd->add_option("--m", a.m, "challenge length")->required();
  cmd->add_option("--pred", a.pred, "xormaj:a,b or table:<hex>:<arity>")->required();
  cmd->add_option("--d", a.d, "input dimension (0 = smallest valid)");
  cmd->add_option("--slice-count", a.slice_count, "long slices (dfa-uniform)");
  cmd->add_option("--split", a.split, "parity positions (plain-monomials)");
  cmd->add_option("--seed", a.seed, "master seed")->required();
}

// --- sample ----------------------------------------------------------------

struct SampleArgs {
  OracleArgs oracle;
  std::string mode = "pseudo", out;
  std::size_t count = 100;
};

int run_sample(const SampleArgs& a) {
  const OracleConfig config = oracle_from_args(a.oracle);
  const Predicate p = parse_predicate_spec(a.oracle.pred);
  const auto c = generate_challenge(a.oracle.n, a.oracle.k, a.oracle.m, p, parse_mode(a.mode),
                                    a.oracle.seed);
  auto stream = make_stream(config, c, Rng(a.oracle.seed).split(2));
  json params = oracle_params(a.oracle);
  params["mode"] = a.mode;
  params["count"] = a.count;
  std::ostringstream text;
  std::vector<Example> examples;
  for (std::size_t i = 0; i < a.count; ++i) {
    auto ex = stream->next();
    if (!ex) {
      throw ExperimentInfeasible("challenge exhausted after " + std::to_string(i) +
                                 " examples (" + std::to_string(c.size()) + " pairs)");
    }
    examples.push_back(std::move(*ex));
  }
  const json header = {{"meta", make_meta("sample", a.oracle.seed, params)},
                       {"dim", config.input_dim()},
                       {"loss", to_string(config.loss())},
                       {"consumed", stream->consumed()}};
  text << header.dump() << '\n';
  for (const auto& ex : examples) text << example_to_json(ex).dump() << '\n';
  emit(a.out, text.str());
  return kOk;
}

// --- experiment ------------------------------------------------------------

struct ExperimentArgs {
  OracleArgs oracle;
  std::string learner, threshold = "fifth", csv, summary;
  std::size_t train = 0, test = 0, trials = 0;
  bool black_box = false;
};

int run_experiment(const ExperimentArgs& a) {
  const OracleConfig config = oracle_from_args(a.oracle);
  GeneratorSpec gen{a.oracle.n, a.oracle.m, parse_predicate_spec(a.oracle.pred)};
  auto learner = make_learner(a.learner);
  if (a.learner == "cheat" && a.black_box) {
    throw ConfigError("the cheat learner needs white-box access; drop --black-box");
  }
  DistinguisherConfig dc{a.train, a.test, threshold_preset(a.threshold, a.oracle.n)};
  if (a.trials < 1) throw ConfigError("--trials must be at least 1");
  const AdvantageReport report =
      estimate_advantage(*learner, gen, config, dc, a.trials, a.oracle.seed, !a.black_box);
  if (report.feasible_pseudo == 0 || report.feasible_random == 0) {
    throw ExperimentInfeasible("the challenge ran out in every trial of an arm: " +
                               std::to_string(a.train + a.test) + " emissions requested from " +
                               std::to_string(a.oracle.m) + " pairs");
  }
  json params = oracle_params(a.oracle);
  params["learner"] = a.learner;
  params["train"] = a.train;
  params["test"] = a.test;
  params["trials"] = a.trials;
  params["threshold"] = a.threshold;
  params["white_box"] = !a.black_box;
  const json meta = make_meta("experiment", a.oracle.seed, params);
  if (!a.csv.empty()) write_text_file(a.csv, "# " + meta.dump() + "\n" + to_csv(report));
  if (!a.summary.empty()) {
    const json summary = {{"meta", meta},
                          {"threshold", dc.threshold},
                          {"trials", report.trials},
                          {"feasible_pseudo", report.feasible_pseudo},
                          {"feasible_random", report.feasible_random},
                          {"accept_pseudo", report.accept_pseudo},
                          {"accept_random", report.accept_random},
                          {"advantage", report.advantage},
                          {"radius", report.radius},
                          {"delta", kAdvantageDelta},
                          {"significant", report.significant}};
    write_text_file(a.summary, dump(summary));
  }
  std::printf("advantage %.4f +/- %.4f (pseudo %.4f, random %.4f; %s)\n", report.advantage,
              report.radius, report.accept_pseudo, report.accept_random,
              report.significant ? "significant" : "not significant");
  return kOk;
}

void add_realize_options(CLI::App* cmd, RealizeArgs& a, bool kind_required) {
  auto* kind = cmd->add_option("kind", a.kind,
                               "dnf | dnf-combined | circuit | intersection | nn2 | nn2-int | "
                               "nn3 | dfa | gf2");
  if (kind_required) kind->required();
  cmd->add_option("--n", a.n, "seed length");
  cmd->add_option("--k", a.k, "predicate arity (parity arity for intersections)");
  cmd->add_option("--l", a.l, "majority arity for intersections");
  cmd->add_option("--d", a.d, "input dimension (0 = smallest valid)");
  cmd->add_option("--slice-count", a.slice_count, "long slices (dfa)");
  cmd->add_option("--pred", a.pred, "xormaj:a,b or table:<hex>:<arity>");
  cmd->add_option("--x", a.x, "seed vector in hex");
  cmd->add_option("--seed", a.seed, "sample the seed vector from this seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local PRG hardness-of-learning toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  ChallengeArgs challenge;
  auto* c = app.add_subcommand("challenge", "generate a challenge sequence");
  c->add_option("--n", challenge.n)->required();
  c->add_option("--k", challenge.k)->required();
  c->add_option("--m", challenge.m)->required();
  c->add_option("--pred", challenge.pred)->required();
  c->add_option("--mode", challenge.mode, "pseudo | random");
  c->add_option("--seed", challenge.seed)->required();
  c->add_flag("--blind", challenge.blind, "omit the hidden truth");
  c->add_option("--out", challenge.out);

  RealizeArgs realize;
  auto* r = app.add_subcommand("realize", "build a realizer hypothesis");
  add_realize_options(r, realize, true);
  r->add_option("--out", realize.out);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "check a realizer against its contract");
  add_realize_options(v, verify.realize, false);
  v->add_option("--hypothesis", verify.hypothesis, "hypothesis file from realize");
  v->add_flag("--all-seeds", verify.all_seeds, "rebuild and check for every seed vector");
  v->add_flag("--monte-carlo", verify.monte_carlo, "score oracle emissions instead of enumerating");
  v->add_option("--samples", verify.samples, "Monte-Carlo emissions");
  v->add_option("--mc-seed", verify.mc_seed, "Monte-Carlo seed");
  v->add_option("--out", verify.out, "JSON report");

  SampleArgs sample;
  auto* s = app.add_subcommand("sample", "draw oracle examples (JSON lines)");
  add_oracle_options(s, sample.oracle);
  s->add_option("--mode", sample.mode, "pseudo | random");
  s->add_option("--count", sample.count);
  s->add_option("--out", sample.out);

  ExperimentArgs experiment;
  auto* e = app.add_subcommand("experiment", "estimate a learner's distinguishing advantage");
  add_oracle_options(e, experiment.oracle);
  e->add_option("--learner", experiment.learner, "constant0 | constant1 | memorize | cheat")
      ->required();
  e->add_option("--train", experiment.train)->required();
  e->add_option("--test", experiment.test)->required();
  e->add_option("--trials", experiment.trials)->required();
  e->add_option("--threshold", experiment.threshold,
                "fifth | bernoulli | weak:<gamma> | dfa:<c> | number");
  e->add_flag("--black-box", experiment.black_box, "hide the challenge from the learner");
  e->add_option("--csv", experiment.csv);
  e->add_option("--summary", experiment.summary);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& ok) {
    return app.exit(ok);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kConfig;
  }

  try {
    if (*c) return run_challenge(challenge);
    if (*r) return run_realize(realize);
    if (*v) {
      if (verify.hypothesis.empty() && verify.realize.kind.empty()) {
        throw ConfigError("verify needs a kind or --hypothesis");
      }
      return run_verify(verify);
    }
    if (*s) return run_sample(sample);
    if (*e) return run_experiment(experiment);
  } catch (const std::exception& err) {
    std::cerr << "lprg: " << err.what() << '\n';
    return kConfig;
  }
  return kConfig;
}
