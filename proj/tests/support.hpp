#pragma once

#include <cmath>
#include <initializer_list>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "lprg/prg.hpp"

namespace lprg::testing {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

inline BitVector bits(std::initializer_list<int> values) {
  BitVector out(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (int v : values) out(i++) = static_cast<std::uint8_t>(v);
  return out;
}

inline std::vector<int> to_ints(const BitVector& v) {
  std::vector<int> out;
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

inline Hyperedge edge(std::initializer_list<std::uint32_t> members) { return {members}; }

/// Written out from the definition, independent of make_xormaj's table.
inline int xormaj_direct(std::size_t a, std::size_t b, const BitVector& z) {
  int parity = 0;
  for (std::size_t i = 0; i < a; ++i) parity ^= z(static_cast<Eigen::Index>(i));
  std::size_t ones = 0;
  for (std::size_t i = a; i < a + b; ++i) ones += z(static_cast<Eigen::Index>(i));
  const int maj = 2 * ones > b ? 1 : 0;
  return parity ^ maj;
}

/// Ordered distinct k-tuples by brute-force filtering of [n]^k.
inline std::vector<Hyperedge> brute_hyperedges(std::size_t n, std::size_t k) {
  std::vector<Hyperedge> out;
  std::vector<std::uint32_t> cur(k, 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t j = k; j-- > 0;) {
      cur[j] = static_cast<std::uint32_t>(c % n);
      c /= n;
    }
    bool distinct = true;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) distinct = distinct && cur[i] != cur[j];
    }
    if (distinct) out.push_back({cur});
  }
  return out;
}

inline double three_sigma(double p, double trials) { return 3.0 * std::sqrt(p * (1 - p) / trials); }

}  // namespace lprg::testing
