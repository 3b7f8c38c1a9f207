#include "lprg/gaussian.hpp"

#include <cmath>

namespace lprg {

namespace {

// Below this acceptance rate plain rejection against N(0, 1) gets slow.
constexpr double kRejectionFloor = 0.05;

}  // namespace

double normal_cdf(double t) { return 0.5 * std::erfc(-t / std::sqrt(2.0)); }

double gaussian_threshold(std::size_t n) {
  require(n >= 2, "gaussian_threshold requires n >= 2");
  const double target = 1.0 / static_cast<double>(n);
  double lo = -40.0;
  double hi = 40.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double value = normal_cdf(mid);
    if (value == target || mid == lo || mid == hi) return mid;
    if (value < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

GaussianLiftParams::GaussianLiftParams(std::size_t n_) : n(n_), c(gaussian_threshold(n_)) {}

double sample_normal_tail(double a, Rng& rng) {
  require(a > 0.0, "sample_normal_tail requires a positive cut");
  const double rate = 0.5 * (a + std::sqrt(a * a + 4.0));
  for (;;) {
    const double t = a - std::log1p(-rng.uniform01()) / rate;
    const double accept = std::exp(-0.5 * (t - rate) * (t - rate));
    if (rng.uniform01() < accept) return t;
  }
}

double GaussianLiftParams::sample_minus(Rng& rng) const {
  if (normal_cdf(c) >= kRejectionFloor || c >= 0.0) {
    for (;;) {
      const double t = rng.normal();
      if (t < c) return t;
    }
  }
  for (;;) {
    const double t = -sample_normal_tail(-c, rng);
    if (t < c) return t;
  }
}

double GaussianLiftParams::sample_plus(Rng& rng) const {
  if (c <= 0.0 || 1.0 - normal_cdf(c) >= kRejectionFloor) {
    for (;;) {
      const double t = rng.normal();
      if (t >= c) return t;
    }
  }
  return sample_normal_tail(c, rng);
}

RealVector gaussian_lift(const BitVector& z, const GaussianLiftParams& params, Rng& rng) {
  RealVector out(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    out(i) = z(i) != 0 ? params.sample_plus(rng) : params.sample_minus(rng);
  }
  return out;
}

BitVector gaussian_round(const RealVector& z_prime, double c) {
  BitVector out(z_prime.size());
  for (Eigen::Index i = 0; i < z_prime.size(); ++i) out(i) = z_prime(i) >= c ? 1 : 0;
  return out;
}

}  // namespace lprg
