#pragma once

#include <string>

#include "lprg/oracles.hpp"

namespace lprg {

enum class OracleFlavor { Plain, PlainMonomials, Bernoulli, UniformCompressed, Gaussian, DfaUniform };

enum class LossKind { ZeroOne, Square };

std::string to_string(OracleFlavor flavor);
OracleFlavor parse_oracle_flavor(const std::string& name);
std::string to_string(LossKind kind);

/// Oracle parameters shared by the stream factory and the matching realizer.
/// `d` = 0 picks the smallest valid dimension for the flavor.
struct OracleConfig {
  OracleFlavor flavor = OracleFlavor::Plain;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::size_t slice_count = 1;  // DfaUniform only
  std::size_t split = 1;        // PlainMonomials only: parity positions

  std::size_t input_dim() const;
  LossKind loss() const;
  void validate() const;
};

/// Fresh stream over `challenge`. Only flavors that sample inputs use `rng`.
std::unique_ptr<ExampleStream> make_stream(const OracleConfig& config,
                                           const ChallengeSequence& challenge, Rng rng);

/// The hypothesis that labels every emission of make_stream correctly when
/// the challenge is pseudorandom with seed x.
Hypothesis realizer_for(const OracleConfig& config, const Predicate& p, const BitVector& x);

}  // namespace lprg
