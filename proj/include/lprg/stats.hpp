#pragma once

#include <string>
#include <vector>

#include "lprg/types.hpp"

namespace lprg {

/// Target marginal for goodness-of-fit checks: independent bits with a fixed
/// Pr[1], or i.i.d. standard normal coordinates.
struct MarginalSpec {
  enum class Kind { Bits, StandardNormal };
  Kind kind = Kind::Bits;
  double p_one = 0.5;
  std::size_t block = 4;  // bits per chi-square projection

  static MarginalSpec uniform_bits(std::size_t block = 4) { return {Kind::Bits, 0.5, block}; }
  static MarginalSpec bernoulli_bits(double p_one, std::size_t block = 4) {
    return {Kind::Bits, p_one, block};
  }
  static MarginalSpec standard_normal() { return {Kind::StandardNormal, 0.0, 0}; }
};

struct MarginalReport {
  std::size_t samples = 0;
  std::size_t tests = 0;       // projections or coordinates tested
  double min_p = 1.0;          // smallest raw p-value
  double corrected_p = 1.0;    // Bonferroni: min(1, tests * min_p)
  double worst_statistic = 0;  // chi-square or KS D at the smallest p
  bool insufficient = false;

  bool passes(double alpha) const { return !insufficient && corrected_p > alpha; }
  std::string summary() const;
};

/// Chi-square over consecutive blocks of `spec.block` bits; each block is a
/// separate test with 2^block - 1 degrees of freedom. Insufficient when any
/// expected cell count is below 5.
MarginalReport chi_square_blocks(const std::vector<BitVector>& samples, const MarginalSpec& spec);

/// One-sample Kolmogorov-Smirnov against N(0, 1) per coordinate.
/// Insufficient below 20 samples.
MarginalReport ks_normal_coordinates(const std::vector<RealVector>& samples);

/// Upper tail of the chi-square distribution.
double chi_square_sf(double statistic, double dof);

/// Asymptotic Kolmogorov survival function at the Stephens-corrected
/// statistic (sqrt N + 0.12 + 0.11 / sqrt N) D.
double kolmogorov_sf(double d, std::size_t samples);

/// 2 exp(-2 N dev^2).
double hoeffding_tail(std::size_t sample_count, double deviation);

}  // namespace lprg
