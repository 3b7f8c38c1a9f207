#pragma once

#include "lprg/types.hpp"

namespace lprg {

/// AND of sign(<w_i, z>) over the rows of an integer weight matrix, with
/// sign(m) = 1 iff m > 0. Thresholds live in the weight of coordinate 0,
/// which is the constant monomial for the inputs this is built over.
class HalfspaceIntersection {
 public:
  HalfspaceIntersection() = default;
  explicit HalfspaceIntersection(Matrix<std::int64_t> weights) : weights_(std::move(weights)) {}

  std::size_t dim() const { return static_cast<std::size_t>(weights_.cols()); }
  std::size_t halfspace_count() const { return static_cast<std::size_t>(weights_.rows()); }
  const Matrix<std::int64_t>& weights() const { return weights_; }

  Vector<std::int64_t> activations(const BitVector& z) const;
  std::uint8_t operator()(const BitVector& z) const;

 private:
  Matrix<std::int64_t> weights_;
};

}  // namespace lprg
