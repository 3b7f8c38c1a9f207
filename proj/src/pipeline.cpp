#include "lprg/pipeline.hpp"

#include "lprg/gaussian_networks.hpp"
#include "lprg/realizers.hpp"

namespace lprg {

namespace {

struct FlavorName {
  OracleFlavor flavor;
  const char* name;
};

constexpr FlavorName kFlavors[] = {
    {OracleFlavor::Plain, "plain"},
    {OracleFlavor::PlainMonomials, "plain-monomials"},
    {OracleFlavor::Bernoulli, "bernoulli"},
    {OracleFlavor::UniformCompressed, "uniform-compressed"},
    {OracleFlavor::Gaussian, "gaussian"},
    {OracleFlavor::DfaUniform, "dfa-uniform"},
};

}  // namespace

std::string to_string(OracleFlavor flavor) {
  for (const auto& f : kFlavors) {
    if (f.flavor == flavor) return f.name;
  }
  return "unknown";
}

OracleFlavor parse_oracle_flavor(const std::string& name) {
  for (const auto& f : kFlavors) {
    if (name == f.name) return f.flavor;
  }
  throw ConfigError("unknown oracle flavor '" + name + "'");
}

std::string to_string(LossKind kind) { return kind == LossKind::Square ? "square" : "zero-one"; }

std::size_t OracleConfig::input_dim() const {
  switch (flavor) {
    case OracleFlavor::Plain:
      return k * n;
    case OracleFlavor::PlainMonomials:
      return MonomialIndexMap(n).dim_out();
    case OracleFlavor::Bernoulli:
    case OracleFlavor::Gaussian:
      return d == 0 ? k * n : d;
    case OracleFlavor::UniformCompressed:
      return d == 0 ? k * exact_log2(n) : d;
    case OracleFlavor::DfaUniform:
      return d == 0 ? slice_count * multi_slice_width(n, k, MultiFlavor::Long) : d;
  }
  return 0;
}

LossKind OracleConfig::loss() const {
  return flavor == OracleFlavor::Gaussian ? LossKind::Square : LossKind::ZeroOne;
}

void OracleConfig::validate() const {
  if (n < 1 || k < 1 || k > n) throw ConfigError("oracle needs 1 <= k <= n");
  const bool pow2 = is_power_of_two(n) && n >= 2;
  switch (flavor) {
    case OracleFlavor::Plain:
      break;
    case OracleFlavor::PlainMonomials:
      if (split < 1 || split >= k) throw ConfigError("plain-monomials needs 1 <= split < k");
      break;
    case OracleFlavor::Bernoulli:
    case OracleFlavor::Gaussian:
      if (d != 0 && d < k * n) throw ConfigError("d must be at least k * n");
      if (flavor == OracleFlavor::Gaussian && n < 2) throw ConfigError("gaussian needs n >= 2");
      break;
    case OracleFlavor::UniformCompressed:
      if (!pow2) throw ConfigError("uniform-compressed needs n a power of two");
      if (d != 0 && d < k * exact_log2(n)) throw ConfigError("d must be at least k * log2(n)");
      break;
    case OracleFlavor::DfaUniform:
      if (!pow2) throw ConfigError("dfa-uniform needs n a power of two");
      if (slice_count < 1) throw ConfigError("dfa-uniform needs slice_count >= 1");
      if (d != 0 && d < slice_count * multi_slice_width(n, k, MultiFlavor::Long)) {
        throw ConfigError("d must be at least slice_count * n * k * log2(n)");
      }
      break;
  }
}

std::unique_ptr<ExampleStream> make_stream(const OracleConfig& config,
                                           const ChallengeSequence& challenge, Rng rng) {
  config.validate();
  const std::size_t d = config.input_dim();
  switch (config.flavor) {
    case OracleFlavor::Plain:
      return oracle_plain(challenge, config.n, config.k);
    case OracleFlavor::PlainMonomials:
      return oracle_plain_monomials(challenge, config.n, config.k, config.split);
    case OracleFlavor::Bernoulli:
      return oracle_bernoulli(challenge, config.n, config.k, d, rng);
    case OracleFlavor::UniformCompressed:
      return oracle_uniform_compressed(challenge, config.n, config.k, d, rng);
    case OracleFlavor::Gaussian:
      return oracle_gaussian(challenge, config.n, config.k, d, GaussianLiftParams(config.n), rng);
    case OracleFlavor::DfaUniform:
      return oracle_dfa_uniform(challenge, config.n, config.k, d, config.slice_count, rng);
  }
  throw ConfigError("unknown oracle flavor");
}

Hypothesis realizer_for(const OracleConfig& config, const Predicate& p, const BitVector& x) {
  config.validate();
  if (p.arity() != config.k) throw ConfigError("predicate arity differs from oracle k");
  const std::size_t n = config.n;
  const std::size_t d = config.input_dim();
  switch (config.flavor) {
    case OracleFlavor::Plain:
      return Hypothesis(dnf_from_predicate(p, x, n));
    case OracleFlavor::PlainMonomials:
      if (!(p == make_xormaj(config.split, config.k - config.split))) {
        throw ConfigError("plain-monomials realizer needs the matching xormaj predicate");
      }
      return Hypothesis(intersection_from_xormaj(x, n, config.split, config.k - config.split));
    case OracleFlavor::Bernoulli:
      return Hypothesis(dnf_combined(p, x, n, d));
    case OracleFlavor::UniformCompressed:
      return Hypothesis(circuit_from_predicate(p, x, n, d));
    case OracleFlavor::Gaussian:
      return Hypothesis(nn3_gaussian<double>(p, x, n, gaussian_threshold(n), d).ntilde);
    case OracleFlavor::DfaUniform:
      return Hypothesis(dfa_full(p, x, n, config.slice_count), d);
  }
  throw ConfigError("unknown oracle flavor");
}

}  // namespace lprg
