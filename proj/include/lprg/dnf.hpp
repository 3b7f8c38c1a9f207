#pragma once

#include <vector>

#include "lprg/types.hpp"

namespace lprg {

struct Literal {
  std::uint32_t coord = 0;
  bool positive = true;

  bool operator==(const Literal&) const = default;
};

using DnfTerm = std::vector<Literal>;

/// OR of ANDs of literals. The empty formula is constant 0; an empty term is
/// constant 1.
class DnfFormula {
 public:
  DnfFormula() = default;
  DnfFormula(std::size_t dim, std::vector<DnfTerm> terms);

  std::size_t dim() const { return dim_; }
  const std::vector<DnfTerm>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool positive_only() const;

  static bool term_satisfied(const DnfTerm& term, const BitVector& z);
  std::size_t satisfied_count(const BitVector& z) const;
  std::uint8_t operator()(const BitVector& z) const;

  /// Disjunction over the same dimension.
  DnfFormula operator|(const DnfFormula& other) const;

 private:
  std::size_t dim_ = 0;
  std::vector<DnfTerm> terms_;
};

}  // namespace lprg
