// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lprg/gaussian_networks.hpp"
#include "lprg/io.hpp"
#include "lprg/realizers.hpp"
#include "lprg/reduction.hpp"
#include "lprg/stats.hpp"
#include "support.hpp"

using namespace lprg;
using namespace lprg::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

using Criterion = std::function<void(Outcome&)>;

// Truth via the table index, independent of the predicate's own evaluator.
int truth(const Predicate& p, const BitVector& x, const Hyperedge& s) {
  std::size_t index = 0;
  for (std::size_t j = 0; j < s.arity(); ++j) index |= std::size_t{x(s[j])} << j;
  return p.table()(static_cast<Eigen::Index>(index));
}

std::vector<Predicate> predicate_sample(std::size_t k, std::size_t random_count, Rng& rng) {
  std::vector<Predicate> out{make_parity(k), make_majority(k)};
  for (std::size_t a = 0; a <= k; ++a) out.push_back(make_xormaj(a, k - a));
  for (std::size_t i = 0; i < random_count; ++i) out.push_back(random_predicate(k, rng));
  return out;
}

ChallengeSequence challenge_for(std::size_t n, std::size_t m, const Predicate& p,
                                ChallengeMode mode, std::uint64_t seed) {
  Rng rng(seed);
  auto g = sample_hypergraph(n, m, p.arity(), rng);
  return make_challenge(p, std::move(g), mode, rng);
}

// ψ_x over all n ≤ 5, k ≤ 3, seeds and hyperedges; also checks the derived nets.
void dnf_suite(Outcome& o, bool with_nn2, bool with_gf2) {
  Rng rng(101);
  std::size_t checked = 0;
  for (std::size_t k = 1; k <= 3; ++k) {
    for (const auto& p : predicate_sample(k, 50, rng)) {
      for (std::size_t n = k; n <= 5; ++n) {
        const auto edges = all_hyperedges(n, k);
        for (std::uint64_t xv = 0; xv < (1u << n); ++xv) {
          const BitVector x = index_to_bits(xv, n);
          const DnfFormula psi = dnf_from_predicate(p, x, n);
          o.require(psi.term_count() <= (std::size_t{1} << k), "term count");
          std::optional<ReluNetwork<std::int64_t>> net;
          std::optional<Gf2Polynomial> h;
          if (with_nn2) net = nn2_from_dnf(psi);
          if (with_gf2) {
            h = gf2_from_dnf(psi);
            o.require(h->sparsity() <= (std::size_t{1} << k), "gf2 sparsity");
          }
          for (const auto& s : edges) {
            const BitVector z = encode_slice_complement(s, n);
            const int y = truth(p, x, s);
            o.require(psi(z) == y, "dnf value");
            if (net) {
              const std::int64_t v = (*net)(z.cast<std::int64_t>());
              o.require(v == 0 || v == 1, "nn2 output outside {0,1}");
              o.require(v == y, "nn2 value");
            }
            if (h) o.require((*h)(z) == y, "gf2 value");
            ++checked;
          }
        }
      }
    }
  }
  o.detail << checked << " (P, x, S) cases";
}

void criterion_dnf(Outcome& o) { dnf_suite(o, false, false); }

void criterion_bernoulli(Outcome& o) {
  const std::size_t n = 8, k = 2, d = 2 * k * n;
  const Predicate p = make_xormaj(1, 1);
  {
    const auto c = challenge_for(n, 4000, p, ChallengeMode::Pseudorandom, 201);
    auto stream = oracle_bernoulli(c, n, k, d, Rng(202));
    const DnfFormula f = dnf_combined(p, *c.seed, n, d);
    std::size_t wrong = 0;
    for (int i = 0; i < 10000; ++i) {
      auto ex = stream->next();
      o.require(ex.has_value(), "stream ended early");
      if (!ex) return;
      wrong += f(std::get<BitVector>(ex->input)) != ex->label;
    }
    o.require(wrong == 0, "dnf_combined loss");
    o.detail << "loss " << wrong << "/10000; ";
  }
  const std::size_t draws = 100000;
  const auto c = challenge_for(n, 20000, p, ChallengeMode::Pseudorandom, 203);
  auto stream = oracle_bernoulli(c, n, k, d, Rng(204));
  std::vector<double> zeros(d, 0.0);
  for (std::size_t i = 0; i < draws; ++i) {
    auto ex = stream->next();
    o.require(ex.has_value(), "stream ended early");
    if (!ex) return;
    const auto& z = std::get<BitVector>(ex->input);
    for (std::size_t j = 0; j < d; ++j) zeros[j] += z(j) == 0;
  }
  double worst = 0;
  const double sigma = three_sigma(1.0 / n, draws) / 3;
  for (double z : zeros) worst = std::max(worst, std::abs(z / draws - 1.0 / n) / sigma);
  o.require(worst <= 3.0, "zero-rate outside 3 sigma");
  o.detail << "worst zero-rate deviation " << worst << " sigma";
}

void criterion_circuit(Outcome& o) {
  Rng rng(301);
  const Predicate p = make_xormaj(1, 1);
  const std::size_t k = 2, pad = 8;
  for (std::size_t n : {4, 8}) {
    const std::size_t w = k * exact_log2(n), d = w + pad;
    for (int rep = 0; rep < 8; ++rep) {
      const BitVector x = random_bits(n, rng);
      const BooleanCircuit c = circuit_from_predicate(p, x, n, d);
      o.require(c.depth() == 3, "depth");
      for (const auto& s : all_hyperedges(n, k)) {
        BitVector z = random_bits(d, rng);
        z.head(w) = encode_compressed(s, n);
        o.require(c(z) == truth(p, x, s), "encoding value");
      }
      if (rep == 0) {
        std::size_t tried = 0;
        while (tried < 10000) {
          const BitVector z = random_bits(d, rng);
          if (decode_compressed(z, n, k, true)) continue;
          o.require(c(z) == 1, "non-encoding value");
          ++tried;
        }
      }
    }
  }
  o.detail << "n in {4,8}, depth 3, 10^4 non-encodings per n";
}

void criterion_intersection(Outcome& o) {
  const std::size_t n = 5, k = 2;
  std::size_t checked = 0;
  for (std::size_t l : {1, 3}) {
    const auto edges = all_hyperedges(n, k + l);
    for (std::uint64_t xv = 0; xv < 32; ++xv) {
      const BitVector x = index_to_bits(xv, n);
      const auto g = intersection_from_xormaj(x, n, k, l);
      o.require(g.halfspace_count() == k, "halfspace count");
      for (const auto& s : edges) {
        const BitVector z = encode_monomials(encode_split_indicator(s, n, k, l), MonomialIndexMap(n));
        o.require(g(z) == xormaj_direct(k, l, restrict_to(x, s)), "value");
        ++checked;
      }
    }
  }
  o.detail << checked << " (l, x, S) cases";
}

void criterion_relu(Outcome& o) {
  dnf_suite(o, true, false);
  std::size_t checked = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      for (std::size_t l = 1; l <= 3 && k + l <= n; ++l) {
        const MonomialIndexMap map(n);
        for (std::uint64_t xv = 0; xv < (1u << n); ++xv) {
          const BitVector x = index_to_bits(xv, n);
          const auto g = intersection_from_xormaj(x, n, k, l);
          const auto net = nn2_from_intersection(g);
          o.require(net.hidden_count() == 2 * k + 1, "gadget width");
          for (const auto& s : all_hyperedges(n, k + l)) {
            const BitVector z = encode_monomials(encode_split_indicator(s, n, k, l), map);
            const std::int64_t v = net(z.cast<std::int64_t>());
            o.require(v == g(z), "gadget net value");
            o.require(v == xormaj_direct(k, l, restrict_to(x, s)), "gadget net vs xormaj");
            ++checked;
          }
        }
      }
    }
  }
  o.detail << "; " << checked << " gadget cases";
}

void criterion_gaussian(Outcome& o) {
  const std::size_t n = 8, k = 2, d = 24;
  const Predicate p = make_xormaj(1, 1);
  const auto ch = challenge_for(n, 20000, p, ChallengeMode::Pseudorandom, 601);
  const BitVector& x = *ch.seed;
  const GaussianLiftParams params(n);
  const double c = params.c, s = 1.0 / (n * n);
  const auto nets = nn3_gaussian<double>(p, x, n, c, d);
  auto stream = oracle_gaussian(ch, n, k, d, params, Rng(602));
  double worst = 0;
  for (int i = 0; i < 10000; ++i) {
    auto ex = stream->next();
    o.require(ex.has_value(), "stream ended early");
    if (!ex) return;
    const double e = nets.ntilde(std::get<RealVector>(ex->input)) - ex->label;
    worst = std::max(worst, e * e);
  }
  o.require(worst <= 1e-12, "squared error");
  for (const auto* net : {&nets.n1, &nets.n2, &nets.n3, &nets.nprime, &nets.ntilde}) {
    o.require(net->max_abs_weight() <= static_cast<double>(n * n), "weight bound");
  }
  // Witnesses: one per label case, for every hyperedge.
  Rng rng(603);
  std::size_t witnesses = 0;
  for (const auto& e : all_hyperedges(n, k)) {
    const BitVector bitsz = encode_slice_complement(e, n);
    RealVector z(k * n);
    for (std::size_t i = 0; i < k * n; ++i) z(i) = bitsz(i) ? c + 3 * s + rng.uniform01() : c - 2 * s - rng.uniform01();
    const double y = truth(p, x, e);
    o.require(gaussian_band(z, n, c) == GaussianBand::Clean, "clean witness band");
    o.require(std::abs(nets.nprime(z) - y) <= 1e-12, "clean witness");
    RealVector inner = z;
    inner(static_cast<Eigen::Index>(rng.below(k * n))) = c + s * (0.1 + 0.8 * rng.uniform01());
    o.require(gaussian_band(inner, n, c) == GaussianBand::Inner, "inner witness band");
    o.require(std::abs(nets.nprime(inner)) <= 1e-12, "inner witness");
    RealVector outer = z;
    const auto one = static_cast<Eigen::Index>(e[0] == 0 ? 1 : 0);  // a 1-bit of slice 0
    outer(one) = c + s + s * (0.2 + 0.7 * rng.uniform01());
    const double expected = gaussian_label(outer, static_cast<std::uint8_t>(y), n, c, nets.n3);
    o.require(gaussian_band(outer, n, c) == GaussianBand::Outer, "outer witness band");
    o.require(std::abs(nets.nprime(outer) - expected) <= 1e-9, "outer witness");
    witnesses += 3;
  }
  o.detail << "worst squared error " << worst << ", " << witnesses << " boundary witnesses";
}

void criterion_dfa(Outcome& o) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t k = 1; k <= std::min<std::size_t>(n, 4) && n * k <= 12; ++k) {
      const Dfa a = dfa_encoding_checker(n, k);
      o.require(a.size() == 2 * k * (std::size_t{1} << k) + 1, "A_E state count");
      for (std::uint64_t w = 0; w < (1u << (n * k)); ++w) {
        const BitVector z = index_to_bits(w, n * k);
        o.require(a.accepts(z) == decode_short(z, n, k).has_value(), "A_E value");
      }
    }
  }
  Rng rng(701);
  const std::size_t n = 4, k = 2;
  for (const auto& p : predicate_sample(k, 10, rng)) {
    for (std::uint64_t xv = 0; xv < 16; ++xv) {
      const BitVector x = index_to_bits(xv, n);
      const Dfa a = dfa_predicate_checker(p, x, n);
      o.require(a.size() == n * k * 9 + 1, "A_P state count");
      for (const auto& s : all_hyperedges(n, k)) {
        o.require(a.accepts(encode_short(s, n, k)) == (truth(p, x, s) == 1), "A_P value");
      }
    }
  }
  const std::size_t slices = 3, width = multi_slice_width(n, k, MultiFlavor::Long);
  const auto edges = all_hyperedges(n, k);
  auto garbage = [&] {
    for (;;) {
      BitVector g = random_bits(width, rng);
      if (!decode_short(psi_map(g, n, k), n, k)) return g;
    }
  };
  const Predicate p = make_xormaj(1, 1);
  const BitVector x = random_bits(n, rng);
  const Dfa a = dfa_full(p, x, n, slices);
  o.require(a.size() == dfa_full_state_count(n, k, slices), "full state count");
  for (int rep = 0; rep < 1000; ++rep) {
    BitVector z = random_bits(slices * width, rng);
    const std::size_t first = rng.below(slices);
    for (std::size_t i = 0; i < first; ++i) z.segment(i * width, width) = garbage();
    const auto& s = edges[rng.below(edges.size())];
    z.segment(first * width, width) = encode_long_random(s, n, k, rng);
    o.require(a.accepts(z) == (truth(p, x, s) == 1), "full DFA on encodings");
    BitVector bad(slices * width);
    for (std::size_t i = 0; i < slices; ++i) bad.segment(i * width, width) = garbage();
    o.require(!a.accepts(bad), "full DFA on non-encodings");
  }
  o.detail << "full DFA has " << a.size() << " states";
}

void criterion_gf2(Outcome& o) { dnf_suite(o, false, true); }

void criterion_marginals(Outcome& o) {
  const std::size_t draws = 100000;
  const Predicate p = make_xormaj(1, 1);
  auto collect_bits = [&](ExampleStream& s) {
    std::vector<BitVector> out;
    for (std::size_t i = 0; i < draws; ++i) {
      auto ex = s.next();
      if (!ex) break;
      out.push_back(std::get<BitVector>(ex->input));
    }
    return out;
  };
  auto report = [&](const char* name, std::size_t n, const MarginalReport& r) {
    o.require(r.samples == draws && r.passes(0.01), std::string(name) + " marginal");
    o.detail << name << "@" << n << " p=" << r.corrected_p << "; ";
  };
  for (std::size_t n : {4, 8}) {
    const std::size_t k = 2;
    const auto c = challenge_for(n, draws, p, ChallengeMode::Pseudorandom, 900 + n);
    auto bern = oracle_bernoulli(c, n, k, 2 * k * n, Rng(901));
    report("bernoulli", n,
           chi_square_blocks(collect_bits(*bern), MarginalSpec::bernoulli_bits(1 - 1.0 / n, 4)));
    auto comp = oracle_uniform_compressed(c, n, k, k * exact_log2(n) + 8, Rng(902));
    report("compressed", n, chi_square_blocks(collect_bits(*comp), MarginalSpec::uniform_bits(4)));
    if (n == 4) {
      auto dfa = oracle_dfa_uniform(c, n, k, 3 * multi_slice_width(n, k, MultiFlavor::Long), 3,
                                    Rng(903));
      report("dfa", n, chi_square_blocks(collect_bits(*dfa), MarginalSpec::uniform_bits(4)));
    }
    auto gauss = oracle_gaussian(c, n, k, k * n + 4, GaussianLiftParams(n), Rng(904));
    std::vector<RealVector> reals;
    for (std::size_t i = 0; i < draws; ++i) reals.push_back(std::get<RealVector>(gauss->next()->input));
    report("gaussian", n, ks_normal_coordinates(reals));
  }
  Rng rng(905);
  std::vector<BitVector> biased;
  for (std::size_t i = 0; i < draws; ++i) {
    BitVector z(16);
    for (Eigen::Index j = 0; j < 16; ++j) z(j) = rng.bernoulli(0.6);
    biased.push_back(z);
  }
  const auto control = chi_square_blocks(biased, MarginalSpec::uniform_bits(4));
  o.require(control.corrected_p < 1e-6, "biased control not rejected");
  o.detail << "biased control p=" << control.corrected_p;
}

void end_to_end(Outcome& o, Learner& learner, std::uint64_t seed,
                const std::function<bool(const AdvantageReport&)>& ok) {
  const GeneratorSpec gen{16, 256, make_xormaj(1, 1)};
  const OracleConfig oracle{OracleFlavor::Plain, 16, 2};
  const auto r = estimate_advantage(learner, gen, oracle, {128, 128, 0.2}, 200, seed);
  o.require(ok(r), "advantage target");
  o.detail << "advantage " << r.advantage << " +/- " << r.radius << " (pseudo " << r.accept_pseudo
           << ", random " << r.accept_random << ")";
}

void criterion_completeness(Outcome& o) {
  auto cheat = learner_cheat();
  end_to_end(o, *cheat, 1001, [](const AdvantageReport& r) { return r.advantage >= 0.9; });
}

void criterion_null(Outcome& o) {
  auto zero = learner_constant(0);
  end_to_end(o, *zero, 1101, [](const AdvantageReport& r) { return std::abs(r.advantage) <= 0.1; });
}

void criterion_determinism(Outcome& o) {
  const Predicate p = make_xormaj(1, 1);
  auto challenge_file = [&] {
    const auto c = challenge_for(16, 128, p, ChallengeMode::Pseudorandom, 1201);
    return dump(challenge_to_json(c, p, make_meta("challenge", 1201, json::object()), false));
  };
  auto example_file = [&](OracleFlavor flavor, std::size_t n) {
    const OracleConfig config{flavor, n, 2, 0, 2};
    const auto c = challenge_for(n, 4000, p, ChallengeMode::Random, 1202);
    auto stream = make_stream(config, c, Rng(1203));
    std::string out;
    for (int i = 0; i < 500; ++i) out += example_to_json(*stream->next()).dump() + "\n";
    return out;
  };
  auto csv = [&] {
    auto memorize = learner_memorize();
    const GeneratorSpec gen{8, 400, p};
    const OracleConfig oracle{OracleFlavor::Gaussian, 8, 2};
    return to_csv(estimate_advantage(*memorize, gen, oracle, {30, 30, 0.2}, 20, 1204));
  };
  o.require(challenge_file() == challenge_file(), "challenge file");
  std::size_t files = 1;
  for (auto [flavor, n] : {std::pair{OracleFlavor::Plain, 8}, {OracleFlavor::Bernoulli, 8},
                           {OracleFlavor::UniformCompressed, 8}, {OracleFlavor::Gaussian, 8},
                           {OracleFlavor::DfaUniform, 4}}) {
    o.require(example_file(flavor, n) == example_file(flavor, n), "example file " + to_string(flavor));
    ++files;
  }
  o.require(csv() == csv(), "csv");
  o.detail << files + 1 << " outputs byte-identical across reruns";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Criterion>> criteria{
      {"dnf realizability", criterion_dnf},
      {"combined dnf under the bernoulli oracle", criterion_bernoulli},
      {"circuit realizability", criterion_circuit},
      {"halfspace intersection realizability", criterion_intersection},
      {"relu equivalences", criterion_relu},
      {"gaussian network contracts", criterion_gaussian},
      {"dfa suite", criterion_dfa},
      {"gf2 equivalence", criterion_gf2},
      {"oracle marginals", criterion_marginals},
      {"end-to-end completeness", criterion_completeness},
      {"end-to-end null", criterion_null},
      {"determinism", criterion_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %s [%.1fs] %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, secs,
                o.detail.str().c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
