#include <cmath>

#include "lprg/random.hpp"
#include "lprg/types.hpp"

namespace lprg {

std::string bits_to_hex(const BitVector& bits) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const auto len = static_cast<std::size_t>(bits.size());
  std::string out((len + 3) / 4, '0');
  for (std::size_t i = 0; i < len; ++i) {
    if (bits(static_cast<Eigen::Index>(i)) == 0) continue;
    auto& digit = out[i / 4];
    int value = (digit <= '9') ? digit - '0' : digit - 'a' + 10;
    value |= 8 >> (i % 4);
    digit = kDigits[value];
  }
  return out;
}

BitVector hex_to_bits(std::string_view hex, std::size_t bit_length) {
  if (hex.size() != (bit_length + 3) / 4) {
    throw InvalidInput("hex string has " + std::to_string(hex.size()) + " digits, expected " +
                       std::to_string((bit_length + 3) / 4) + " for " +
                       std::to_string(bit_length) + " bits");
  }
  BitVector bits = BitVector::Zero(static_cast<Eigen::Index>(bit_length));
  for (std::size_t d = 0; d < hex.size(); ++d) {
    const char c = hex[d];
    int value;
    if (c >= '0' && c <= '9') {
      value = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      value = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      value = c - 'A' + 10;
    } else {
      throw InvalidInput(std::string("invalid hex digit '") + c + "'");
    }
    for (int b = 0; b < 4; ++b) {
      const std::size_t i = d * 4 + static_cast<std::size_t>(b);
      const bool set = (value & (8 >> b)) != 0;
      if (i >= bit_length) {
        if (set) throw InvalidInput("nonzero padding bits in hex string");
        continue;
      }
      bits(static_cast<Eigen::Index>(i)) = set ? 1 : 0;
    }
  }
  return bits;
}

std::string bits_key(const BitVector& bits) {
  std::string key(static_cast<std::size_t>(bits.size()), '0');
  for (Eigen::Index i = 0; i < bits.size(); ++i) key[static_cast<std::size_t>(i)] += bits(i);
  return key;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidInput("Rng::below requires a positive bound");
  using u128 = unsigned __int128;
  u128 product = static_cast<u128>((*this)()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<u128>((*this)()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform01() - 1.0;
    v = 2.0 * uniform01() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double scale = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * scale;
  has_spare_ = true;
  return u * scale;
}

}  // namespace lprg
