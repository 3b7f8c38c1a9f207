#include "lprg/verify.hpp"

#include <cmath>
#include <functional>

#include "lprg/gaussian_networks.hpp"
#include "lprg/realizers.hpp"

namespace lprg {

namespace {

struct KindName {
  RealizerKind kind;
  const char* name;
};

constexpr KindName kKinds[] = {
    {RealizerKind::Dnf, "dnf"},       {RealizerKind::DnfCombined, "dnf-combined"},
    {RealizerKind::Circuit, "circuit"}, {RealizerKind::Intersection, "intersection"},
    {RealizerKind::Nn2, "nn2"},       {RealizerKind::Nn2Int, "nn2-int"},
    {RealizerKind::Nn3, "nn3"},       {RealizerKind::Dfa, "dfa"},
    {RealizerKind::Gf2, "gf2"},
};

bool is_intersection(RealizerKind kind) {
  return kind == RealizerKind::Intersection || kind == RealizerKind::Nn2Int;
}

std::string edge_string(const Hyperedge& s) {
  std::string out = "S=(";
  for (std::size_t j = 0; j < s.arity(); ++j) {
    if (j) out += ',';
    out += std::to_string(s[j]);
  }
  return out + ")";
}

class Checker {
 public:
  Checker(const Hypothesis& h, const VerifyOptions& options, VerifyReport& report)
      : h_(h), options_(options), report_(report) {}

  void operator()(const Input& input, double expected, const std::function<std::string()>& where) {
    const double out = h_(input);
    const double err = (out - expected) * (out - expected);
    report_.max_error = std::max(report_.max_error, err);
    const bool ok = h_.range() == Range::Real ? err <= options_.tolerance : out == expected;
    ++report_.checked;
    if (!ok) {
      ++report_.mismatches;
      if (report_.first_mismatches.size() < 5) {
        report_.first_mismatches.push_back(where() + " expected " + std::to_string(expected) +
                                           " got " + std::to_string(out));
      }
    }
  }

 private:
  const Hypothesis& h_;
  const VerifyOptions& options_;
  VerifyReport& report_;
};

void exhaustive_edges(const RealizerSpec& spec, Checker& check) {
  const std::size_t arity = spec.predicate.arity();
  const MonomialIndexMap map(spec.n);
  for (const auto& s : all_hyperedges(spec.n, arity)) {
    const double expected = spec.predicate(restrict_to(spec.x, s));
    BitVector z = is_intersection(spec.kind)
                      ? encode_monomials(encode_split_indicator(s, spec.n, spec.k, spec.l), map)
                      : encode_slice_complement(s, spec.n);
    check(z, expected, [&s] { return edge_string(s); });
  }
}

void exhaustive_words(const RealizerSpec& spec, std::size_t dim, Checker& check) {
  const std::uint64_t total = std::uint64_t{1} << dim;
  for (std::uint64_t w = 0; w < total; ++w) {
    const BitVector z = index_to_bits(w, dim);
    std::optional<Hyperedge> s;
    double fallback = 1.0;
    switch (spec.kind) {
      case RealizerKind::DnfCombined:
        s = decode_slice_complement(z, spec.n, spec.k, true);
        break;
      case RealizerKind::Circuit:
        s = decode_compressed(z, spec.n, spec.k, true);
        break;
      case RealizerKind::Dfa:
        if (auto found = locate_multi_encoding(z, spec.n, spec.k, spec.slice_count,
                                               MultiFlavor::Long)) {
          s = found->second;
        }
        fallback = 0.0;
        break;
      default:
        throw ConfigError("no word enumeration for " + to_string(spec.kind));
    }
    const double expected = s ? spec.predicate(restrict_to(spec.x, *s)) : fallback;
    check(z, expected, [&z] { return "z=" + bits_to_hex(z); });
  }
}

void monte_carlo(const RealizerSpec& spec, const VerifyOptions& options, Checker& check) {
  const OracleConfig oracle = spec.oracle();
  Rng rng(options.seed);
  Rng graph_rng = rng.split(0);
  ChallengeSequence challenge;
  challenge.graph = sample_hypergraph(spec.n, options.samples, spec.predicate.arity(), graph_rng);
  challenge.labels = prg_evaluate(spec.predicate, challenge.graph, spec.x);
  challenge.mode = ChallengeMode::Pseudorandom;
  challenge.seed = spec.x;
  auto stream = make_stream(oracle, challenge, rng.split(1));
  for (std::size_t i = 0; i < options.samples; ++i) {
    auto ex = stream->next();
    if (!ex) break;
    check(ex->input, ex->label, [i] { return "emission " + std::to_string(i); });
  }
}

}  // namespace

std::string to_string(RealizerKind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k.name;
  }
  return "unknown";
}

RealizerKind parse_realizer_kind(const std::string& name) {
  for (const auto& k : kKinds) {
    if (name == k.name) return k.kind;
  }
  throw ConfigError("unknown realizer kind '" + name + "'");
}

OracleConfig RealizerSpec::oracle() const {
  OracleConfig c;
  c.n = n;
  c.k = k;
  c.d = d;
  c.slice_count = slice_count;
  switch (kind) {
    case RealizerKind::Dnf:
    case RealizerKind::Nn2:
    case RealizerKind::Gf2:
      c.flavor = OracleFlavor::Plain;
      c.d = 0;
      break;
    case RealizerKind::Intersection:
    case RealizerKind::Nn2Int:
      c.flavor = OracleFlavor::PlainMonomials;
      c.k = k + l;
      c.split = k;
      c.d = 0;
      break;
    case RealizerKind::DnfCombined:
      c.flavor = OracleFlavor::Bernoulli;
      break;
    case RealizerKind::Circuit:
      c.flavor = OracleFlavor::UniformCompressed;
      break;
    case RealizerKind::Nn3:
      c.flavor = OracleFlavor::Gaussian;
      break;
    case RealizerKind::Dfa:
      c.flavor = OracleFlavor::DfaUniform;
      break;
  }
  return c;
}

void RealizerSpec::validate() const {
  if (static_cast<std::size_t>(x.size()) != n) throw ConfigError("seed x must have n bits");
  if (is_intersection(kind)) {
    if (k < 1 || l < 1) throw ConfigError("intersection needs k >= 1 and l >= 1");
    if (!(predicate == make_xormaj(k, l))) {
      throw ConfigError("intersection realizers need the predicate xormaj:k,l");
    }
  } else if (predicate.arity() != k) {
    throw ConfigError("predicate arity differs from k");
  }
  oracle().validate();
  if (kind == RealizerKind::Nn3 && (std::size_t{1} << k) > n * n) {
    throw ConfigError("nn3 needs 2^k <= n^2");
  }
}

Hypothesis build_realizer(const RealizerSpec& spec) {
  spec.validate();
  const std::size_t dim = spec.oracle().input_dim();
  const auto& p = spec.predicate;
  switch (spec.kind) {
    case RealizerKind::Dnf:
      return Hypothesis(dnf_from_predicate(p, spec.x, spec.n));
    case RealizerKind::DnfCombined:
      return Hypothesis(dnf_combined(p, spec.x, spec.n, dim));
    case RealizerKind::Circuit:
      return Hypothesis(circuit_from_predicate(p, spec.x, spec.n, dim));
    case RealizerKind::Intersection:
      return Hypothesis(intersection_from_xormaj(spec.x, spec.n, spec.k, spec.l));
    case RealizerKind::Nn2:
      return Hypothesis(nn2_from_dnf(p, spec.x, spec.n));
    case RealizerKind::Nn2Int:
      return Hypothesis(nn2_from_intersection(spec.x, spec.n, spec.k, spec.l));
    case RealizerKind::Nn3:
      return Hypothesis(nn3_gaussian<double>(p, spec.x, spec.n, gaussian_threshold(spec.n), dim).ntilde);
    case RealizerKind::Dfa:
      return Hypothesis(dfa_full(p, spec.x, spec.n, spec.slice_count), dim);
    case RealizerKind::Gf2:
      return Hypothesis(gf2_from_dnf(dnf_from_predicate(p, spec.x, spec.n)));
  }
  throw ConfigError("unknown realizer kind");
}

void VerifyReport::merge(const VerifyReport& other) {
  if (mode.empty()) mode = other.mode;
  checked += other.checked;
  mismatches += other.mismatches;
  max_error = std::max(max_error, other.max_error);
  for (const auto& m : other.first_mismatches) {
    if (first_mismatches.size() < 5) first_mismatches.push_back(m);
  }
}

VerifyReport verify_realizer(const Hypothesis& h, const RealizerSpec& spec,
                             const VerifyOptions& options) {
  spec.validate();
  const std::size_t dim = spec.oracle().input_dim();
  if (h.dim() != dim) {
    throw ConfigError("hypothesis dimension " + std::to_string(h.dim()) +
                      " differs from the expected " + std::to_string(dim));
  }
  VerifyReport report;
  Checker check(h, options, report);

  bool by_edges = false;
  std::uint64_t cases = 0;
  switch (spec.kind) {
    case RealizerKind::Dnf:
    case RealizerKind::Nn2:
    case RealizerKind::Gf2:
    case RealizerKind::Intersection:
    case RealizerKind::Nn2Int:
      by_edges = true;
      cases = falling_factorial(spec.n, spec.predicate.arity());
      break;
    case RealizerKind::DnfCombined:
    case RealizerKind::Circuit:
    case RealizerKind::Dfa:
      cases = dim >= 63 ? UINT64_MAX : std::uint64_t{1} << dim;
      break;
    case RealizerKind::Nn3:
      cases = UINT64_MAX;  // continuous domain
      break;
  }

  if (options.monte_carlo) {
    report.mode = "monte-carlo";
    monte_carlo(spec, options, check);
    return report;
  }
  if (cases > options.exhaustive_limit) {
    throw ConfigError(to_string(spec.kind) + " at this scale is too large for exhaustive " +
                      "verification; pass --monte-carlo");
  }
  report.mode = "exhaustive";
  if (by_edges) {
    exhaustive_edges(spec, check);
  } else {
    exhaustive_words(spec, dim, check);
  }
  return report;
}

}  // namespace lprg
