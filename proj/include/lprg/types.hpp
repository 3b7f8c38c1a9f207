#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace lprg {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Dense bit vector; every coefficient is 0 or 1.
using BitVector = Vector<std::uint8_t>;
using RealVector = Vector<double>;

/// Precondition violated by caller-supplied data.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inconsistent or unsupported configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An experiment ran out of challenge pairs before it could finish.
class ExperimentInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, std::string_view message) {
  if (!condition) throw InvalidInput(std::string(message));
}

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// log2 of a power of two.
inline std::size_t exact_log2(std::size_t n) {
  require(is_power_of_two(n), "n must be a power of two");
  std::size_t r = 0;
  while ((std::size_t{1} << r) < n) ++r;
  return r;
}

/// Serializes bits as hex; each digit holds four consecutive bits, first bit
/// in the most significant position. The tail is zero-padded.
std::string bits_to_hex(const BitVector& bits);

/// Inverse of bits_to_hex. Rejects bad digits, wrong digit counts and
/// nonzero padding.
BitVector hex_to_bits(std::string_view hex, std::size_t bit_length);

/// Packs bits into a string key (one char per bit) for hashing.
std::string bits_key(const BitVector& bits);

}  // namespace lprg
