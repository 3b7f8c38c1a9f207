#pragma once

#include <string>
#include <vector>

#include "lprg/pipeline.hpp"

namespace lprg {

enum class RealizerKind { Dnf, DnfCombined, Circuit, Intersection, Nn2, Nn2Int, Nn3, Dfa, Gf2 };

std::string to_string(RealizerKind kind);
RealizerKind parse_realizer_kind(const std::string& name);

/// Everything needed to rebuild a realizer and its ground truth. For the
/// intersection kinds `k` is the parity arity and `l` the majority arity, so
/// the predicate is xormaj_{k,l}; elsewhere `l` is unused.
struct RealizerSpec {
  RealizerKind kind = RealizerKind::Dnf;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t l = 0;
  std::size_t d = 0;  // 0 = smallest valid input dimension
  std::size_t slice_count = 1;
  Predicate predicate{1, BitVector::Zero(2)};
  BitVector x;

  /// Oracle whose emissions the realizer labels correctly.
  OracleConfig oracle() const;
  void validate() const;
};

Hypothesis build_realizer(const RealizerSpec& spec);

struct VerifyOptions {
  bool monte_carlo = false;
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  std::uint64_t exhaustive_limit = std::uint64_t{1} << 22;
  double tolerance = 1e-12;  // squared error allowed for real-valued outputs
};

struct VerifyReport {
  std::string mode;  // "exhaustive" or "monte-carlo"
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  double max_error = 0.0;
  std::vector<std::string> first_mismatches;  // at most five

  void merge(const VerifyReport& other);
};

/// Compares h with the ground truth of `spec`. Exhaustive mode enumerates
/// every hyperedge or every input word, whichever defines the contract;
/// Monte-Carlo mode scores h on oracle emissions over a pseudorandom
/// challenge with seed spec.x. Throws ConfigError when exhaustive mode would
/// exceed the limit (or does not exist for the kind) and monte_carlo is off.
VerifyReport verify_realizer(const Hypothesis& h, const RealizerSpec& spec,
                             const VerifyOptions& options);

}  // namespace lprg
