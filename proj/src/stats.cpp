#include "lprg/stats.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>

#include <boost/math/special_functions/gamma.hpp>

#include "lprg/gaussian.hpp"

namespace lprg {

std::string MarginalReport::summary() const {
  char buf[160];
  std::snprintf(buf, sizeof buf, "samples=%zu tests=%zu min_p=%.3g corrected_p=%.3g stat=%.4g%s",
                samples, tests, min_p, corrected_p, worst_statistic,
                insufficient ? " (insufficient data)" : "");
  return buf;
}

double chi_square_sf(double statistic, double dof) {
  require(dof > 0, "chi-square needs positive degrees of freedom");
  if (statistic <= 0) return 1.0;
  return boost::math::gamma_q(dof / 2.0, statistic / 2.0);
}

double kolmogorov_sf(double d, std::size_t samples) {
  const double root = std::sqrt(static_cast<double>(samples));
  const double lambda = (root + 0.12 + 0.11 / root) * d;
  if (lambda < 1e-3) return 1.0;
  double sum = 0.0;
  for (int j = 1; j <= 200; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += (j % 2 == 1 ? term : -term);
    if (term < 1e-300) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

double hoeffding_tail(std::size_t sample_count, double deviation) {
  require(sample_count >= 1, "hoeffding_tail needs at least one sample");
  require(deviation > 0, "hoeffding_tail needs a positive deviation");
  return 2.0 * std::exp(-2.0 * static_cast<double>(sample_count) * deviation * deviation);
}

namespace {

void record(MarginalReport& report, double p, double statistic) {
  ++report.tests;
  if (p < report.min_p || report.tests == 1) {
    report.min_p = p;
    report.worst_statistic = statistic;
  }
}

void finish(MarginalReport& report) {
  report.corrected_p = std::min(1.0, report.min_p * static_cast<double>(report.tests));
}

}  // namespace

MarginalReport chi_square_blocks(const std::vector<BitVector>& samples, const MarginalSpec& spec) {
  require(spec.kind == MarginalSpec::Kind::Bits, "chi-square needs a bit marginal");
  require(spec.block >= 1 && spec.block <= 16, "chi-square block must be 1..16 bits");
  require(spec.p_one > 0.0 && spec.p_one < 1.0, "bit marginal needs 0 < Pr[1] < 1");
  require(!samples.empty(), "marginal test needs samples");
  MarginalReport report;
  report.samples = samples.size();
  const std::size_t dim = static_cast<std::size_t>(samples.front().size());
  const std::size_t cells = std::size_t{1} << spec.block;
  const double total = static_cast<double>(samples.size());

  std::vector<double> expected(cells);
  for (std::size_t cell = 0; cell < cells; ++cell) {
    const int ones = std::popcount(cell);
    expected[cell] = total * std::pow(spec.p_one, ones) *
                     std::pow(1.0 - spec.p_one, static_cast<double>(spec.block) - ones);
  }
  if (*std::min_element(expected.begin(), expected.end()) < 5.0 || dim < spec.block) {
    report.insufficient = true;
    return report;
  }
  std::vector<double> counts(cells);
  for (std::size_t start = 0; start + spec.block <= dim; start += spec.block) {
    std::fill(counts.begin(), counts.end(), 0.0);
    for (const auto& s : samples) {
      require(static_cast<std::size_t>(s.size()) == dim, "samples differ in dimension");
      std::size_t cell = 0;
      for (std::size_t t = 0; t < spec.block; ++t) {
        cell = (cell << 1) | s(static_cast<Eigen::Index>(start + t));
      }
      counts[cell] += 1.0;
    }
    double statistic = 0.0;
    for (std::size_t cell = 0; cell < cells; ++cell) {
      const double diff = counts[cell] - expected[cell];
      statistic += diff * diff / expected[cell];
    }
    record(report, chi_square_sf(statistic, static_cast<double>(cells - 1)), statistic);
  }
  finish(report);
  return report;
}

MarginalReport ks_normal_coordinates(const std::vector<RealVector>& samples) {
  require(!samples.empty(), "marginal test needs samples");
  MarginalReport report;
  report.samples = samples.size();
  if (samples.size() < 20) {
    report.insufficient = true;
    return report;
  }
  const auto dim = samples.front().size();
  const double total = static_cast<double>(samples.size());
  std::vector<double> column(samples.size());
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (std::size_t i = 0; i < samples.size(); ++i) {
      require(samples[i].size() == dim, "samples differ in dimension");
      column[i] = samples[i](c);
    }
    std::sort(column.begin(), column.end());
    double d = 0.0;
    for (std::size_t i = 0; i < column.size(); ++i) {
      const double f = normal_cdf(column[i]);
      d = std::max({d, static_cast<double>(i + 1) / total - f, f - static_cast<double>(i) / total});
    }
    record(report, kolmogorov_sf(d, samples.size()), d);
  }
  finish(report);
  return report;
}

}  // namespace lprg
