#include <map>

#include "lprg/realizers.hpp"

namespace lprg {

namespace {

std::uint32_t coord(std::size_t slice, std::size_t width, std::size_t offset) {
  return static_cast<std::uint32_t>(slice * width + offset);
}

void check_seed(const BitVector& x, std::size_t n) {
  require(n >= 1, "n must be positive");
  require(static_cast<std::size_t>(x.size()) == n, "seed length must equal n");
}

}  // namespace

DnfFormula dnf_from_predicate(const Predicate& p, const BitVector& x, std::size_t n,
                              std::size_t dim) {
  check_seed(x, n);
  const std::size_t k = p.arity();
  require(k <= n, "predicate arity exceeds n");
  if (dim == 0) dim = k * n;
  require(dim >= k * n, "DNF dimension must be at least k * n");
  std::vector<DnfTerm> terms;
  for (const BitVector& b : p.satisfying_assignments()) {
    DnfTerm term;
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        if (x(static_cast<Eigen::Index>(l)) != b(static_cast<Eigen::Index>(j))) {
          term.push_back({coord(j, n, l), true});
        }
      }
    }
    terms.push_back(std::move(term));
  }
  return DnfFormula(dim, std::move(terms));
}

std::size_t dnf_nonencoding_term_count(std::size_t n, std::size_t k) {
  return k * n * (n - 1) / 2 + k + n * k * (k - 1) / 2;
}

DnfFormula dnf_nonencoding(std::size_t n, std::size_t k, std::size_t dim) {
  require(n >= 1 && k >= 1, "dnf_nonencoding requires n, k >= 1");
  require(dim >= k * n, "DNF dimension must be at least k * n");
  std::vector<DnfTerm> terms;
  terms.reserve(dnf_nonencoding_term_count(n, k));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t l = 0; l < n; ++l) {
      for (std::size_t l2 = l + 1; l2 < n; ++l2) {
        terms.push_back({{coord(j, n, l), false}, {coord(j, n, l2), false}});
      }
    }
  }
  for (std::size_t j = 0; j < k; ++j) {
    DnfTerm all_ones;
    for (std::size_t l = 0; l < n; ++l) all_ones.push_back({coord(j, n, l), true});
    terms.push_back(std::move(all_ones));
  }
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t j2 = j + 1; j2 < k; ++j2) {
      for (std::size_t l = 0; l < n; ++l) {
        terms.push_back({{coord(j, n, l), false}, {coord(j2, n, l), false}});
      }
    }
  }
  return DnfFormula(dim, std::move(terms));
}

DnfFormula dnf_combined(const Predicate& p, const BitVector& x, std::size_t n, std::size_t dim) {
  return dnf_nonencoding(n, p.arity(), dim) | dnf_from_predicate(p, x, n, dim);
}

BooleanCircuit circuit_from_predicate(const Predicate& p, const BitVector& x, std::size_t n,
                                      std::size_t dim) {
  check_seed(x, n);
  require(n >= 2, "circuit realizer requires n >= 2");
  const std::size_t width = exact_log2(n);
  const std::size_t k = p.arity();
  require(k <= n, "predicate arity exceeds n");
  if (dim == 0) dim = k * width;
  require(dim >= k * width, "circuit dimension must be at least k * log2(n)");

  std::vector<Gate> gates;
  // "slice j does not hold l": some bit of slice j differs from bin(l).
  std::map<std::pair<std::size_t, std::size_t>, std::uint32_t> differs;
  auto differs_gate = [&](std::size_t j, std::size_t l) {
    auto [it, fresh] = differs.try_emplace({j, l}, static_cast<std::uint32_t>(gates.size()));
    if (fresh) {
      Gate g{GateKind::Or, {}};
      for (std::size_t t = 0; t < width; ++t) {
        const bool bit = ((l >> (width - 1 - t)) & 1u) != 0;
        g.inputs.push_back(GateInput::literal(coord(j, width, t), !bit));
      }
      gates.push_back(std::move(g));
    }
    return it->second;
  };

  std::vector<Gate> terms;
  for (const BitVector& b : p.satisfying_assignments()) {
    Gate term{GateKind::And, {}};
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        if (x(static_cast<Eigen::Index>(l)) != b(static_cast<Eigen::Index>(j))) {
          term.inputs.push_back(GateInput::gate(differs_gate(j, l)));
        }
      }
    }
    terms.push_back(std::move(term));
  }
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t j2 = j + 1; j2 < k; ++j2) {
      for (std::size_t l = 0; l < n; ++l) {
        Gate equal{GateKind::And, {}};
        for (std::size_t t = 0; t < width; ++t) {
          const bool bit = ((l >> (width - 1 - t)) & 1u) != 0;
          equal.inputs.push_back(GateInput::literal(coord(j, width, t), bit));
          equal.inputs.push_back(GateInput::literal(coord(j2, width, t), bit));
        }
        terms.push_back(std::move(equal));
      }
    }
  }
  Gate top{GateKind::Or, {}};
  for (auto& term : terms) {
    top.inputs.push_back(GateInput::gate(static_cast<std::uint32_t>(gates.size())));
    gates.push_back(std::move(term));
  }
  gates.push_back(std::move(top));
  return BooleanCircuit(dim, std::move(gates));
}

Gf2Polynomial gf2_from_dnf(const DnfFormula& psi) {
  require(psi.positive_only(), "GF(2) conversion needs a DNF with positive literals only");
  std::vector<Gf2Polynomial::Monomial> monomials;
  for (const auto& term : psi.terms()) {
    Gf2Polynomial::Monomial m;
    for (const auto& lit : term) m.push_back(lit.coord);
    monomials.push_back(std::move(m));
  }
  return Gf2Polynomial(psi.dim(), std::move(monomials));
}

}  // namespace lprg
