#pragma once

#include "lprg/realizers.hpp"

namespace lprg {

/// Networks over lifted encodings z' in R^{kn} around the threshold c, with
/// step 1/n^2. Templated so boundary behaviour can be checked with exact
/// rationals; production code instantiates double.
///
///  n1     P_x via a soft threshold per coordinate then one neuron per term.
///  n2     2^k times the non-encoding DNF over the same soft threshold.
///  n3     2^k times a tent per coordinate, 1 on (c, c + 1/n^2), 0 outside
///         (c - 1/n^2, c + 2/n^2).
///  nprime [n1 - n2 - n3]_+ as a single depth-3 network.
///  ntilde nprime reading the first kn of `dim` inputs.
template <typename Scalar>
struct GaussianNetworks {
  ReluNetwork<Scalar> n1, n2, n3, nprime, ntilde;
};

namespace gaussian_detail {

template <typename Scalar>
Scalar power_of_two(std::size_t k) {
  Scalar out(1);
  for (std::size_t i = 0; i < k; ++i) out = out + out;
  return out;
}

/// Layer of 2 * count neurons: [t_i - c]_+ and [t_i - c - 1/n^2]_+.
template <typename Scalar>
void soft_threshold_rows(ReluLayer<Scalar>& layer, std::size_t first_row, std::size_t count,
                         const Scalar& c, const Scalar& step) {
  for (std::size_t i = 0; i < count; ++i) {
    const auto r = static_cast<Eigen::Index>(first_row + 2 * i);
    layer.weights(r, static_cast<Eigen::Index>(i)) = Scalar(1);
    layer.bias(r) = -c;
    layer.weights(r + 1, static_cast<Eigen::Index>(i)) = Scalar(1);
    layer.bias(r + 1) = -(c + step);
  }
}

/// One neuron per DNF term over soft-threshold outputs f_i = n^2 (u_{2i} -
/// u_{2i+1}); a negative literal contributes 1 - f_i.
template <typename Scalar>
void term_rows(ReluLayer<Scalar>& layer, std::size_t first_row, const DnfFormula& psi,
               std::size_t soft_offset, const Scalar& slope) {
  for (std::size_t t = 0; t < psi.term_count(); ++t) {
    const auto r = static_cast<Eigen::Index>(first_row + t);
    const auto& term = psi.terms()[t];
    Scalar bias = Scalar(1) - Scalar(static_cast<std::int64_t>(term.size()));
    for (const auto& lit : term) {
      const auto a = static_cast<Eigen::Index>(soft_offset + 2 * lit.coord);
      const Scalar sign = lit.positive ? Scalar(1) : Scalar(-1);
      layer.weights(r, a) += sign * slope;
      layer.weights(r, a + 1) -= sign * slope;
      if (!lit.positive) bias += Scalar(1);
    }
    layer.bias(r) = bias;
  }
}

template <typename Scalar>
void check_weight_bound(const ReluNetwork<Scalar>& net, const Scalar& bound) {
  require(!(bound < net.max_abs_weight()), "Gaussian network weight exceeds n^2");
}

}  // namespace gaussian_detail

/// 2^k * sum_i m_i with m_i = n^2 ([t - c + s]_+ - [t - c]_+ - [t - c - s]_+ +
/// [t - c - 2s]_+), s = 1/n^2. The n^2 factor sits on the input weights so the
/// output weights stay 2^k. Independent of the seed and the predicate.
template <typename Scalar>
ReluNetwork<Scalar> nn3_tent_network(std::size_t n, std::size_t k, const Scalar& c) {
  const std::size_t kn = k * n;
  const Scalar slope(static_cast<std::int64_t>(n * n));
  const Scalar scale = gaussian_detail::power_of_two<Scalar>(k);
  auto l1 = make_layer<Scalar>(4 * kn, kn, true);
  auto l2 = make_layer<Scalar>(1, 4 * kn, false);
  for (std::size_t i = 0; i < kn; ++i) {
    const auto r = static_cast<Eigen::Index>(4 * i);
    for (int piece = 0; piece < 4; ++piece) {
      l1.weights(r + piece, static_cast<Eigen::Index>(i)) = slope;
      l1.bias(r + piece) = -(slope * c) + Scalar(1 - piece);
    }
    l2.weights(0, r) = scale;
    l2.weights(0, r + 1) = -scale;
    l2.weights(0, r + 2) = -scale;
    l2.weights(0, r + 3) = scale;
  }
  return ReluNetwork<Scalar>(kn, {std::move(l1), std::move(l2)});
}

template <typename Scalar>
GaussianNetworks<Scalar> nn3_gaussian(const Predicate& p, const BitVector& x, std::size_t n,
                                      const Scalar& c, std::size_t dim = 0) {
  using namespace gaussian_detail;
  const std::size_t k = p.arity();
  const std::size_t kn = k * n;
  if (dim == 0) dim = kn;
  require(dim >= kn, "Gaussian network dimension must be at least k * n");
  require(k < 63 && (std::uint64_t{1} << k) <= static_cast<std::uint64_t>(n) * n,
          "Gaussian networks need 2^k <= n^2 to respect the weight bound");

  const Scalar slope(static_cast<std::int64_t>(n * n));
  const Scalar step = Scalar(1) / slope;
  const Scalar scale = power_of_two<Scalar>(k);
  const DnfFormula psi_x = dnf_from_predicate(p, x, n);
  const DnfFormula phi = dnf_nonencoding(n, k, kn);
  const std::size_t tx = psi_x.term_count();
  const std::size_t tphi = phi.term_count();

  GaussianNetworks<Scalar> out;

  {  // n1: soft threshold -> psi_x terms -> sum.
    auto l1 = make_layer<Scalar>(2 * kn, kn, true);
    soft_threshold_rows(l1, 0, kn, c, step);
    auto l2 = make_layer<Scalar>(tx, 2 * kn, true);
    term_rows(l2, 0, psi_x, 0, slope);
    auto l3 = make_layer<Scalar>(1, tx, false);
    l3.weights.setConstant(Scalar(1));
    out.n1 = ReluNetwork<Scalar>(kn, {std::move(l1), std::move(l2), std::move(l3)});
  }
  {  // n2: soft threshold -> phi terms -> 2^k * sum.
    auto l1 = make_layer<Scalar>(2 * kn, kn, true);
    soft_threshold_rows(l1, 0, kn, c, step);
    auto l2 = make_layer<Scalar>(tphi, 2 * kn, true);
    term_rows(l2, 0, phi, 0, slope);
    auto l3 = make_layer<Scalar>(1, tphi, false);
    l3.weights.setConstant(scale);
    out.n2 = ReluNetwork<Scalar>(kn, {std::move(l1), std::move(l2), std::move(l3)});
  }
  out.n3 = nn3_tent_network<Scalar>(n, k, c);

  // Composite: layer 1 holds the shared soft threshold (2kn) and the four
  // tent pieces per coordinate (4kn); layer 2 holds psi_x terms, phi terms and
  // one pass-through neuron per tent; output [n1 - 2^k phi - 2^k m]_+.
  auto compose = [&](std::size_t input_dim) {
    const std::size_t tent_offset = 2 * kn;
    auto l1 = make_layer<Scalar>(6 * kn, input_dim, true);
    soft_threshold_rows(l1, 0, kn, c, step);
    for (std::size_t i = 0; i < kn; ++i) {
      const auto r = static_cast<Eigen::Index>(tent_offset + 4 * i);
      for (int piece = 0; piece < 4; ++piece) {
        l1.weights(r + piece, static_cast<Eigen::Index>(i)) = Scalar(1);
        l1.bias(r + piece) = -(c + Scalar(piece - 1) * step);
      }
    }
    auto l2 = make_layer<Scalar>(tx + tphi + kn, 6 * kn, true);
    term_rows(l2, 0, psi_x, 0, slope);
    term_rows(l2, tx, phi, 0, slope);
    for (std::size_t i = 0; i < kn; ++i) {
      const auto r = static_cast<Eigen::Index>(tx + tphi + i);
      const auto a = static_cast<Eigen::Index>(tent_offset + 4 * i);
      l2.weights(r, a) = slope;
      l2.weights(r, a + 1) = -slope;
      l2.weights(r, a + 2) = -slope;
      l2.weights(r, a + 3) = slope;
    }
    auto l3 = make_layer<Scalar>(1, tx + tphi + kn, true);
    for (std::size_t t = 0; t < tx; ++t) l3.weights(0, static_cast<Eigen::Index>(t)) = Scalar(1);
    for (std::size_t t = tx; t < tx + tphi + kn; ++t) {
      l3.weights(0, static_cast<Eigen::Index>(t)) = -scale;
    }
    return ReluNetwork<Scalar>(input_dim, {std::move(l1), std::move(l2), std::move(l3)});
  };
  out.nprime = compose(kn);
  out.ntilde = compose(dim);

  for (const auto* net : {&out.n1, &out.n2, &out.n3, &out.nprime, &out.ntilde}) {
    check_weight_bound(*net, slope);
  }
  return out;
}

}  // namespace lprg
