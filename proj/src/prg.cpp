#include "lprg/prg.hpp"

#include <bit>
#include <numeric>

namespace lprg {

namespace {

constexpr std::size_t kMaxArity = 30;

std::size_t table_index(std::span<const std::uint8_t> bits) {
  std::size_t index = 0;
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (bits[j] != 0) index |= std::size_t{1} << j;
  }
  return index;
}

template <typename F>
Predicate tabulate(std::size_t arity, F&& f) {
  require(arity >= 1 && arity <= kMaxArity, "predicate arity must be in [1, 30]");
  const std::size_t size = std::size_t{1} << arity;
  BitVector table(static_cast<Eigen::Index>(size));
  for (std::size_t index = 0; index < size; ++index) {
    table(static_cast<Eigen::Index>(index)) = f(index) ? 1 : 0;
  }
  return Predicate(arity, std::move(table));
}

}  // namespace

Predicate::Predicate(std::size_t arity, BitVector table) : arity_(arity), table_(std::move(table)) {
  require(arity_ >= 1 && arity_ <= kMaxArity, "predicate arity must be in [1, 30]");
  require(static_cast<std::size_t>(table_.size()) == (std::size_t{1} << arity_),
          "truth table length must equal 2^arity");
  for (Eigen::Index i = 0; i < table_.size(); ++i) {
    require(table_(i) <= 1, "truth table entries must be bits");
  }
}

std::uint8_t Predicate::operator()(std::span<const std::uint8_t> bits) const {
  if (bits.size() != arity_) {
    throw InvalidInput("predicate of arity " + std::to_string(arity_) + " applied to " +
                       std::to_string(bits.size()) + " bits");
  }
  return at(table_index(bits));
}

std::uint8_t Predicate::operator()(const BitVector& bits) const {
  return (*this)(std::span<const std::uint8_t>(bits.data(), static_cast<std::size_t>(bits.size())));
}

std::size_t Predicate::count_ones() const {
  std::size_t ones = 0;
  for (Eigen::Index i = 0; i < table_.size(); ++i) ones += table_(i);
  return ones;
}

std::vector<BitVector> Predicate::satisfying_assignments() const {
  std::vector<BitVector> out;
  for (Eigen::Index i = 0; i < table_.size(); ++i) {
    if (table_(i) != 0) out.push_back(index_to_bits(static_cast<std::uint64_t>(i), arity_));
  }
  return out;
}

std::uint8_t predicate_eval(const Predicate& p, std::span<const std::uint8_t> bits) { return p(bits); }

Predicate make_majority(std::size_t arity) {
  return tabulate(arity, [arity](std::size_t index) {
    return 2 * static_cast<std::size_t>(std::popcount(index)) > arity;
  });
}

Predicate make_parity(std::size_t arity) {
  return tabulate(arity, [](std::size_t index) { return (std::popcount(index) & 1) != 0; });
}

Predicate make_xormaj(std::size_t a, std::size_t b) {
  require(a + b >= 1, "xormaj requires a + b >= 1");
  return tabulate(a + b, [a, b](std::size_t index) {
    const std::size_t xor_mask = (std::size_t{1} << a) - 1;
    const bool parity = (std::popcount(index & xor_mask) & 1) != 0;
    const bool majority = 2 * static_cast<std::size_t>(std::popcount(index >> a)) > b;
    return parity != majority;
  });
}

Predicate random_predicate(std::size_t arity, Rng& rng) {
  return tabulate(arity, [&rng](std::size_t) { return rng.bit(); });
}

bool Hyperedge::valid_for(std::size_t n) const {
  for (std::size_t j = 0; j < members.size(); ++j) {
    if (members[j] >= n) return false;
    for (std::size_t i = 0; i < j; ++i) {
      if (members[i] == members[j]) return false;
    }
  }
  return true;
}

void Hypergraph::validate() const {
  require(k >= 1 && k <= n, "hypergraph requires 1 <= k <= n");
  for (const auto& e : edges) {
    require(e.arity() == k, "hyperedge arity differs from hypergraph arity");
    require(e.valid_for(n), "hyperedge members must be distinct and in range");
  }
}

BitVector restrict_to(const BitVector& x, const Hyperedge& s) {
  BitVector out(static_cast<Eigen::Index>(s.arity()));
  for (std::size_t j = 0; j < s.arity(); ++j) {
    require(s[j] < static_cast<std::size_t>(x.size()), "hyperedge member outside seed range");
    out(static_cast<Eigen::Index>(j)) = x(static_cast<Eigen::Index>(s[j]));
  }
  return out;
}

Hypergraph sample_hypergraph(std::size_t n, std::size_t m, std::size_t k, Rng& rng) {
  require(k >= 1 && k <= n, "sample_hypergraph requires 1 <= k <= n");
  require(m >= 1, "sample_hypergraph requires m >= 1");
  Hypergraph g{n, k, {}};
  g.edges.reserve(m);
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<std::size_t> swaps(k);
  for (std::size_t e = 0; e < m; ++e) {
    Hyperedge edge;
    edge.members.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
      const auto r = j + static_cast<std::size_t>(rng.below(n - j));
      std::swap(perm[j], perm[r]);
      swaps[j] = r;
      edge.members[j] = perm[j];
    }
    for (std::size_t j = k; j-- > 0;) std::swap(perm[j], perm[swaps[j]]);
    g.edges.push_back(std::move(edge));
  }
  return g;
}

std::vector<Hyperedge> all_hyperedges(std::size_t n, std::size_t k) {
  require(k >= 1 && k <= n, "all_hyperedges requires 1 <= k <= n");
  std::vector<Hyperedge> out;
  Hyperedge current;
  current.members.reserve(k);
  std::vector<bool> used(n, false);
  auto recurse = [&](auto&& self) -> void {
    if (current.members.size() == k) {
      out.push_back(current);
      return;
    }
    for (std::uint32_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      current.members.push_back(v);
      self(self);
      current.members.pop_back();
      used[v] = false;
    }
  };
  recurse(recurse);
  return out;
}

std::uint64_t falling_factorial(std::size_t n, std::size_t k) {
  std::uint64_t out = 1;
  for (std::size_t j = 0; j < k; ++j) out *= (n - j);
  return out;
}

BitVector prg_evaluate(const Predicate& p, const Hypergraph& g, const BitVector& x) {
  require(p.arity() == g.k, "predicate arity differs from hyperedge arity");
  require(static_cast<std::size_t>(x.size()) == g.n, "seed length differs from vertex count");
  BitVector out(static_cast<Eigen::Index>(g.m()));
  for (std::size_t i = 0; i < g.m(); ++i) {
    out(static_cast<Eigen::Index>(i)) = p(restrict_to(x, g.edges[i]));
  }
  return out;
}

bool ChallengeSequence::consistent_with(const Predicate& p) const {
  if (static_cast<std::size_t>(labels.size()) != graph.m()) return false;
  if (mode == ChallengeMode::Random) return !seed.has_value();
  if (!seed) return false;
  return prg_evaluate(p, graph, *seed) == labels;
}

BitVector random_bits(std::size_t length, Rng& rng) {
  BitVector out(static_cast<Eigen::Index>(length));
  for (std::size_t i = 0; i < length; ++i) out(static_cast<Eigen::Index>(i)) = rng.bit() ? 1 : 0;
  return out;
}

BitVector index_to_bits(std::uint64_t value, std::size_t length) {
  BitVector out(static_cast<Eigen::Index>(length));
  for (std::size_t j = 0; j < length; ++j) {
    out(static_cast<Eigen::Index>(j)) = static_cast<std::uint8_t>((value >> j) & 1u);
  }
  return out;
}

ChallengeSequence make_challenge(const Predicate& p, Hypergraph g, ChallengeMode mode, Rng& rng) {
  g.validate();
  require(p.arity() == g.k, "predicate arity differs from hyperedge arity");
  ChallengeSequence c;
  c.mode = mode;
  if (mode == ChallengeMode::Pseudorandom) {
    BitVector x = random_bits(g.n, rng);
    c.labels = prg_evaluate(p, g, x);
    c.seed = std::move(x);
  } else {
    c.labels = random_bits(g.m(), rng);
  }
  c.graph = std::move(g);
  return c;
}

}  // namespace lprg
