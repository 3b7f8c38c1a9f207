#include <gtest/gtest.h>

#include "lprg/gaussian.hpp"
#include "lprg/gaussian_networks.hpp"
#include "support.hpp"

using namespace lprg;
using namespace lprg::testing;

namespace {

// Exact tent reference, piece by piece.
Rational tent(const Rational& t, const Rational& c, const Rational& s) {
  if (t <= c - s || t >= c + 2 * s) return 0;
  if (t < c) return (t - c + s) / s;
  if (t <= c + s) return 1;
  return (c + 2 * s - t) / s;
}

struct Fixture {
  std::size_t n, k;
  Rational c, s;
  Predicate p;
  BitVector x;
  GaussianNetworks<Rational> nets;

  Fixture(std::size_t n_, const Predicate& p_, const BitVector& x_, Rational c_)
      : n(n_), k(p_.arity()), c(c_), s(Rational(1) / (n_ * n_)), p(p_), x(x_),
        nets(nn3_gaussian<Rational>(p_, x_, n_, c_)) {}

  Rational random_offset(Rng& rng) const { return Rational(rng.below(1000) + 1, 1000); }

  // Lift of z away from the outer band: 1-bits above c + 2s, 0-bits below c - s.
  Vector<Rational> clean_lift(const BitVector& z, Rng& rng) const {
    Vector<Rational> out(z.size());
    for (Eigen::Index i = 0; i < z.size(); ++i) {
      out(i) = z(i) ? c + 2 * s + random_offset(rng) : c - s - random_offset(rng);
    }
    return out;
  }
};

}  // namespace

TEST(GaussianNetworks, SizesAndWeightBound) {
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{8, 2}, {4, 2}, {4, 4}, {2, 2}}) {
    const Predicate p = make_xormaj(1, k - 1);
    const auto nets = nn3_gaussian<double>(p, index_to_bits(0x5, n), n, gaussian_threshold(n));
    const double bound = static_cast<double>(n * n);
    const std::size_t kn = k * n;
    const std::size_t tphi = dnf_nonencoding_term_count(n, k);
    EXPECT_LE(nets.n1.hidden_count(), 2 * kn + (std::size_t{1} << k));
    EXPECT_LE(nets.n2.hidden_count(), 2 * kn + tphi);
    EXPECT_EQ(nets.n3.hidden_count(), 4 * kn);
    for (const auto* net : {&nets.n1, &nets.n2, &nets.n3, &nets.nprime, &nets.ntilde}) {
      EXPECT_LE(net->max_abs_weight(), bound);
    }
    EXPECT_TRUE(nets.nprime.output_activation());
  }
  EXPECT_THROW(nn3_gaussian<double>(make_parity(3), BitVector::Zero(2), 2, 0.0), InvalidInput);
}

TEST(GaussianNetworks, TentBoundaries) {
  const std::size_t n = 4, k = 2;
  const Rational c(-27, 40), s(1, 16);
  const auto n3 = nn3_tent_network<Rational>(n, k, c);
  Rng rng(1);
  Vector<Rational> z(k * n);
  // Far from the band every tent is zero.
  z.setConstant(c + 1);
  EXPECT_EQ(n3(z), Rational(0));
  z(3) = c;  // tent value at c is exactly 1
  EXPECT_EQ(n3(z), Rational(4));
  z(5) = c + s / 2;
  EXPECT_EQ(n3(z), Rational(8));
  z(5) = c - s;
  EXPECT_EQ(n3(z), Rational(4));
  z(5) = c + 2 * s;
  EXPECT_EQ(n3(z), Rational(4));
  for (int rep = 0; rep < 500; ++rep) {
    Rational expected = 0;
    for (Eigen::Index i = 0; i < z.size(); ++i) {
      z(i) = c + Rational(static_cast<std::int64_t>(rng.below(801)) - 400, 1600);
      expected += tent(z(i), c, s);
    }
    ASSERT_EQ(n3(z), 4 * expected);
  }
}

TEST(GaussianNetworks, CleanEncodingsGiveThePredicate) {
  Rng rng(2);
  for (std::size_t n : {4, 8}) {
    const Fixture f(n, make_xormaj(1, 1), random_bits(n, rng), Rational(-23, 20));
    for (const auto& s : all_hyperedges(n, 2)) {
      const auto z = f.clean_lift(encode_slice_complement(s, n), rng);
      const Rational y = f.p(restrict_to(f.x, s));
      ASSERT_EQ(f.nets.n1(z), y);
      ASSERT_EQ(f.nets.n2(z), Rational(0));
      ASSERT_EQ(f.nets.n3(z), Rational(0));
      ASSERT_EQ(f.nets.nprime(z), y);
    }
  }
}

TEST(GaussianNetworks, NonEncodingsAreSuppressed) {
  Rng rng(3);
  const std::size_t n = 4;
  const Fixture f(n, make_xormaj(1, 1), bits({1, 1, 0, 1}), Rational(-27, 40));
  int witnesses = 0;
  for (std::uint64_t w = 0; w < 256; ++w) {
    const BitVector z = index_to_bits(w, 2 * n);
    if (decode_slice_complement(z, n, 2)) continue;
    const auto lifted = f.clean_lift(z, rng);
    ASSERT_GE(f.nets.n2(lifted), Rational(4));
    ASSERT_EQ(f.nets.nprime(lifted), Rational(0));
    ++witnesses;
  }
  EXPECT_EQ(witnesses, 256 - 12);
}

TEST(GaussianNetworks, InnerBandIsSuppressed) {
  Rng rng(4);
  const std::size_t n = 4;
  const Fixture f(n, make_xormaj(1, 1), bits({0, 1, 1, 0}), Rational(-27, 40));
  for (const auto& s : all_hyperedges(n, 2)) {
    auto z = f.clean_lift(encode_slice_complement(s, n), rng);
    const auto i = static_cast<Eigen::Index>(rng.below(2 * n));
    z(i) = f.c + f.s * Rational(static_cast<std::int64_t>(rng.below(99)) + 1, 100);
    ASSERT_GE(f.nets.n3(z), Rational(4));
    ASSERT_EQ(f.nets.nprime(z), Rational(0));
  }
}

TEST(GaussianNetworks, CompositeIsReluOfDifference) {
  Rng rng(5);
  const std::size_t n = 4;
  const Fixture f(n, make_xormaj(1, 1), bits({1, 0, 1, 1}), Rational(-27, 40));
  Vector<Rational> z(2 * n);
  for (int rep = 0; rep < 2000; ++rep) {
    for (Eigen::Index i = 0; i < z.size(); ++i) {
      z(i) = f.c + Rational(static_cast<std::int64_t>(rng.below(161)) - 80, 320);
    }
    const Rational diff = f.nets.n1(z) - f.nets.n2(z) - f.nets.n3(z);
    ASSERT_EQ(f.nets.nprime(z), diff > 0 ? diff : Rational(0));
  }
}

TEST(GaussianNetworks, TildeReadsThePrefix) {
  Rng rng(6);
  const std::size_t n = 8, k = 2, d = 40;
  const double c = gaussian_threshold(n);
  const auto nets = nn3_gaussian<double>(make_xormaj(1, 1), random_bits(n, rng), n, c, d);
  EXPECT_EQ(nets.ntilde.input_dim(), d);
  for (int rep = 0; rep < 2000; ++rep) {
    RealVector z(d);
    for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = rng.normal();
    const double full = nets.ntilde(z);
    ASSERT_EQ(full, nets.nprime(RealVector(z.head(k * n))));
    ASSERT_GE(full, 0.0);
  }
}
