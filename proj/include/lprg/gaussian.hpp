#pragma once

#include "lprg/random.hpp"
#include "lprg/types.hpp"

namespace lprg {

/// Standard normal CDF, 0.5 * erfc(-t / sqrt 2).
double normal_cdf(double t);

/// c with normal_cdf(c) = 1/n, found by bisection. n = 2 gives exactly 0.
double gaussian_threshold(std::size_t n);

/// Threshold c and the two truncated densities around it: mu_minus is the
/// standard normal conditioned on t < c (mass 1/n), mu_plus the standard
/// normal conditioned on t >= c (mass 1 - 1/n). Mixing them with weights
/// 1/n and 1 - 1/n recovers N(0, 1).
struct GaussianLiftParams {
  std::size_t n = 0;
  double c = 0.0;

  explicit GaussianLiftParams(std::size_t n_);
  GaussianLiftParams(std::size_t n_, double c_) : n(n_), c(c_) {}

  double sample_minus(Rng& rng) const;
  double sample_plus(Rng& rng) const;
};

/// 1-bits draw from mu_plus, 0-bits from mu_minus.
RealVector gaussian_lift(const BitVector& z, const GaussianLiftParams& params, Rng& rng);

/// z'_i >= c maps to 1.
BitVector gaussian_round(const RealVector& z_prime, double c);

/// Sample from N(0, 1) conditioned on t >= a for a > 0 (Robert's
/// exponential proposal); used when the tail mass is too small for plain
/// rejection.
double sample_normal_tail(double a, Rng& rng);

}  // namespace lprg
