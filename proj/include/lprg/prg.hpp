#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lprg/random.hpp"
#include "lprg/types.hpp"

namespace lprg {

/// A k-ary Boolean predicate stored as its truth table. Table index is
/// sum_j bits[j] * 2^j, so the first coordinate is least significant.
class Predicate {
 public:
  Predicate(std::size_t arity, BitVector table);

  std::size_t arity() const { return arity_; }
  const BitVector& table() const { return table_; }

  /// P(bits). Throws InvalidInput on arity mismatch.
  std::uint8_t operator()(std::span<const std::uint8_t> bits) const;
  std::uint8_t operator()(const BitVector& bits) const;

  /// Evaluation by table index.
  std::uint8_t at(std::size_t index) const { return table_(static_cast<Eigen::Index>(index)); }

  std::size_t count_ones() const;

  /// Satisfying assignments, each as a bit vector of length `arity`.
  std::vector<BitVector> satisfying_assignments() const;

  bool operator==(const Predicate& other) const {
    return arity_ == other.arity_ && table_ == other.table_;
  }

 private:
  std::size_t arity_;
  BitVector table_;
};

/// maj_k(z) = 1 iff sum z > k/2 (strict).
Predicate make_majority(std::size_t arity);
Predicate make_parity(std::size_t arity);

/// (z_1 ^ ... ^ z_a) ^ maj_b(z_{a+1}, ..., z_{a+b}). Requires a + b >= 1.
Predicate make_xormaj(std::size_t a, std::size_t b);

/// Uniformly random truth table.
Predicate random_predicate(std::size_t arity, Rng& rng);

std::uint8_t predicate_eval(const Predicate& p, std::span<const std::uint8_t> bits);

/// Ordered tuple of distinct vertices. Members are 0-based internally; the
/// 1-based vertex i of the usual notation is stored as i - 1.
struct Hyperedge {
  std::vector<std::uint32_t> members;

  std::size_t arity() const { return members.size(); }
  std::uint32_t operator[](std::size_t j) const { return members[j]; }
  bool operator==(const Hyperedge&) const = default;
  auto operator<=>(const Hyperedge&) const = default;

  /// Members pairwise distinct and < n.
  bool valid_for(std::size_t n) const;
};

struct Hypergraph {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<Hyperedge> edges;

  std::size_t m() const { return edges.size(); }
  void validate() const;
};

/// x restricted to S: (x_{S_1}, ..., x_{S_k}).
BitVector restrict_to(const BitVector& x, const Hyperedge& s);

/// m edges i.i.d. uniform over the n(n-1)...(n-k+1) ordered distinct tuples,
/// each drawn by a k-step partial Fisher-Yates shuffle.
Hypergraph sample_hypergraph(std::size_t n, std::size_t m, std::size_t k, Rng& rng);

/// Every ordered distinct k-tuple over [n], lexicographic.
std::vector<Hyperedge> all_hyperedges(std::size_t n, std::size_t k);

/// Number of ordered distinct k-tuples over [n].
std::uint64_t falling_factorial(std::size_t n, std::size_t k);

/// f_{P,G}(x) = (P(x_{S_1}), ..., P(x_{S_m})).
BitVector prg_evaluate(const Predicate& p, const Hypergraph& g, const BitVector& x);

enum class ChallengeMode { Pseudorandom, Random };

/// Labelled hyperedges plus the hidden ground truth of which arm produced them.
struct ChallengeSequence {
  Hypergraph graph;
  BitVector labels;
  ChallengeMode mode = ChallengeMode::Random;
  std::optional<BitVector> seed;  // set iff mode == Pseudorandom

  std::size_t size() const { return graph.edges.size(); }
  std::size_t n() const { return graph.n; }
  std::size_t k() const { return graph.k; }
  const Hyperedge& edge(std::size_t i) const { return graph.edges[i]; }
  std::uint8_t label(std::size_t i) const { return labels(static_cast<Eigen::Index>(i)); }

  /// Pseudorandom challenges: labels equal prg_evaluate of the recorded seed.
  bool consistent_with(const Predicate& p) const;
};

/// Pseudorandom: x uniform, labels = f_{P,G}(x). Random: labels i.i.d. fair bits.
ChallengeSequence make_challenge(const Predicate& p, Hypergraph g, ChallengeMode mode, Rng& rng);

BitVector random_bits(std::size_t length, Rng& rng);

/// Bits of `value`, least significant first.
BitVector index_to_bits(std::uint64_t value, std::size_t length);

}  // namespace lprg
