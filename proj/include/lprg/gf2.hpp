#pragma once

#include <vector>

#include "lprg/types.hpp"

namespace lprg {

/// Sum over GF(2) of monomials, each a product of distinct coordinates.
/// Construction sorts every monomial and cancels repeated ones in pairs, so
/// the stored set has no duplicates. The empty monomial is the constant 1.
class Gf2Polynomial {
 public:
  using Monomial = std::vector<std::uint32_t>;

  Gf2Polynomial() = default;
  Gf2Polynomial(std::size_t dim, std::vector<Monomial> monomials);

  std::size_t dim() const { return dim_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::size_t sparsity() const { return monomials_.size(); }

  std::uint8_t operator()(const BitVector& z) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Monomial> monomials_;
};

}  // namespace lprg
