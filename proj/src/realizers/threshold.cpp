#include <map>

#include "lprg/realizers.hpp"

namespace lprg {

namespace {

/// Integer polynomial of degree <= 2 in 2n Boolean variables, using z_i^2 = z_i.
struct Quadratic {
  std::int64_t constant = 0;
  std::map<std::size_t, std::int64_t> linear;
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> pairs;

  void add_linear(std::size_t i, std::int64_t c) { linear[i] += c; }
  void add_product(std::size_t i, std::size_t j, std::int64_t c) {
    if (i == j) {
      add_linear(i, c);
    } else {
      pairs[{std::min(i, j), std::max(i, j)}] += c;
    }
  }

  Quadratic& operator+=(const Quadratic& o) {
    constant += o.constant;
    for (auto [i, c] : o.linear) linear[i] += c;
    for (auto [ij, c] : o.pairs) pairs[ij] += c;
    return *this;
  }

  Quadratic scaled(std::int64_t s) const {
    Quadratic out = *this;
    out.constant *= s;
    for (auto& [i, c] : out.linear) c *= s;
    for (auto& [ij, c] : out.pairs) c *= s;
    return out;
  }

  Vector<std::int64_t> weights(const MonomialIndexMap& map) const {
    Vector<std::int64_t> w = Vector<std::int64_t>::Zero(static_cast<Eigen::Index>(map.dim_out()));
    w(0) = constant;
    for (auto [i, c] : linear) w(static_cast<Eigen::Index>(map.linear(i))) += c;
    for (auto [ij, c] : pairs) w(static_cast<Eigen::Index>(map.pair(ij.first, ij.second))) += c;
    return w;
  }
};

/// Linear form sum_j coeff_j z_{offset + j} plus a constant.
struct Affine {
  std::int64_t constant = 0;
  std::vector<std::pair<std::size_t, std::int64_t>> terms;

  Quadratic lift() const {
    Quadratic q;
    q.constant = constant;
    for (auto [i, c] : terms) q.add_linear(i, c);
    return q;
  }

  Quadratic times(const Affine& o) const {
    Quadratic q;
    q.constant = constant * o.constant;
    for (auto [i, c] : terms) q.add_linear(i, c * o.constant);
    for (auto [i, c] : o.terms) q.add_linear(i, c * constant);
    for (auto [i, a] : terms) {
      for (auto [j, b] : o.terms) q.add_product(i, j, a * b);
    }
    return q;
  }
};

Affine inner_with_seed(const BitVector& x, std::size_t offset, std::int64_t constant) {
  Affine a;
  a.constant = constant;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    if (x(j) != 0) a.terms.emplace_back(offset + static_cast<std::size_t>(j), 1);
  }
  return a;
}

}  // namespace

HalfspaceIntersection intersection_from_xormaj(const BitVector& x, std::size_t n, std::size_t k,
                                               std::size_t l) {
  require(static_cast<std::size_t>(x.size()) == n, "seed length must equal n");
  require(k >= 1 && l >= 1, "intersection realizer requires k, l >= 1");
  require(k + l <= n, "k + l must not exceed n");
  const MonomialIndexMap map(n);
  const auto li = static_cast<std::int64_t>(l);
  const auto ki = static_cast<std::int64_t>(k);
  const std::int64_t half = li / 2;

  // A = <x, z^1> counts parity bits set, B = <x, z^2> counts majority bits.
  // Halfspace i < k fires unless A == i, where it reduces to maj (i even) or
  // not-maj (i odd). The last halfspace fires unless A is 0 or k.
  Matrix<std::int64_t> w(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(map.dim_out()));
  const Affine beta = inner_with_seed(x, n, -half);  // B - floor(l/2)
  for (std::size_t i = 1; i < k; ++i) {
    const Affine shifted = inner_with_seed(x, 0, -static_cast<std::int64_t>(i));
    Quadratic f = shifted.times(shifted).scaled(li);
    if (i % 2 == 0) {
      f += beta.lift();
    } else {
      Quadratic tail = beta.lift().scaled(-1);
      tail.constant += 1;
      f += tail;
    }
    w.row(static_cast<Eigen::Index>(i - 1)) = f.weights(map).transpose();
  }
  // Endpoint halfspace. With M = l + 2 and D = 2B - 2 floor(l/2) - 1 (odd,
  // positive iff maj holds): k even uses M A (k - A) + D, k odd uses
  // M A (k - A) + (k - 2A) D. The M term dominates for 0 < A < k.
  const Affine a = inner_with_seed(x, 0, 0);
  Affine k_minus_a = inner_with_seed(x, 0, ki);
  for (auto& [i, c] : k_minus_a.terms) c = -1;
  Affine d = inner_with_seed(x, n, -2 * half - 1);
  for (auto& [i, c] : d.terms) c = 2;
  Quadratic endpoint = a.times(k_minus_a).scaled(li + 2);
  if (k % 2 == 0) {
    endpoint += d.lift();
  } else {
    Affine sign = inner_with_seed(x, 0, ki);
    for (auto& [i, c] : sign.terms) c = -2;
    endpoint += sign.times(d);
  }
  w.row(static_cast<Eigen::Index>(k - 1)) = endpoint.weights(map).transpose();
  return HalfspaceIntersection(std::move(w));
}

ReluNetwork<std::int64_t> nn2_from_dnf(const DnfFormula& psi) {
  const std::size_t terms = psi.term_count();
  auto hidden = make_layer<std::int64_t>(terms, psi.dim(), true);
  for (std::size_t t = 0; t < terms; ++t) {
    const auto& term = psi.terms()[t];
    for (const auto& lit : term) {
      require(lit.positive, "nn2_from_dnf needs positive literals only");
      hidden.weights(static_cast<Eigen::Index>(t), lit.coord) = 1;
    }
    hidden.bias(static_cast<Eigen::Index>(t)) = 1 - static_cast<std::int64_t>(term.size());
  }
  auto out = make_layer<std::int64_t>(1, terms, false);
  out.weights.setOnes();
  return ReluNetwork<std::int64_t>(psi.dim(), {std::move(hidden), std::move(out)});
}

ReluNetwork<std::int64_t> nn2_from_dnf(const Predicate& p, const BitVector& x, std::size_t n) {
  return nn2_from_dnf(dnf_from_predicate(p, x, n));
}

ReluNetwork<std::int64_t> nn2_from_intersection(const HalfspaceIntersection& g) {
  const std::size_t k = g.halfspace_count();
  auto hidden = make_layer<std::int64_t>(2 * k + 1, g.dim(), true);
  auto out = make_layer<std::int64_t>(1, 2 * k + 1, false);
  for (std::size_t i = 0; i < k; ++i) {
    const auto r = static_cast<Eigen::Index>(2 * i);
    hidden.weights.row(r) = g.weights().row(static_cast<Eigen::Index>(i));
    hidden.weights.row(r + 1) = g.weights().row(static_cast<Eigen::Index>(i));
    hidden.bias(r + 1) = -1;
    out.weights(0, r) = 1;
    out.weights(0, r + 1) = -1;
  }
  // Constant neuron: no inputs, bias k - 1, subtracted at the output.
  const auto last = static_cast<Eigen::Index>(2 * k);
  hidden.bias(last) = static_cast<std::int64_t>(k) - 1;
  out.weights(0, last) = -1;
  return ReluNetwork<std::int64_t>(g.dim(), {std::move(hidden), std::move(out)});
}

ReluNetwork<std::int64_t> nn2_from_intersection(const BitVector& x, std::size_t n, std::size_t k,
                                                std::size_t l) {
  return nn2_from_intersection(intersection_from_xormaj(x, n, k, l));
}

}  // namespace lprg
