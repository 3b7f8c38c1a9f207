#include "lprg/encodings.hpp"

namespace lprg {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

void check_edge(const Hyperedge& s, std::size_t n) {
  require(s.arity() >= 1, "hyperedge must be non-empty");
  require(s.valid_for(n), "hyperedge members must be distinct and below n");
}

void check_length(const BitVector& z, std::size_t expected, bool allow_suffix, const char* what) {
  const auto len = static_cast<std::size_t>(z.size());
  if (allow_suffix ? len < expected : len != expected) {
    throw InvalidInput(std::string(what) + ": input has length " + std::to_string(len) +
                       ", expected " + (allow_suffix ? "at least " : "") + std::to_string(expected));
  }
}

bool distinct(const std::vector<std::uint32_t>& members) {
  for (std::size_t j = 0; j < members.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (members[i] == members[j]) return false;
    }
  }
  return true;
}

}  // namespace

void write_binary(BitVector& out, std::size_t offset, std::size_t value, std::size_t width) {
  for (std::size_t t = 0; t < width; ++t) {
    out(idx(offset + t)) = static_cast<std::uint8_t>((value >> (width - 1 - t)) & 1u);
  }
}

std::size_t read_binary(const BitVector& in, std::size_t offset, std::size_t width) {
  std::size_t value = 0;
  for (std::size_t t = 0; t < width; ++t) value = (value << 1) | in(idx(offset + t));
  return value;
}

BitVector encode_slice_complement(const Hyperedge& s, std::size_t n) {
  check_edge(s, n);
  BitVector z = BitVector::Ones(idx(s.arity() * n));
  for (std::size_t j = 0; j < s.arity(); ++j) z(idx(j * n + s[j])) = 0;
  return z;
}

std::optional<Hyperedge> decode_slice_complement(const BitVector& z, std::size_t n, std::size_t k,
                                                 bool allow_suffix) {
  require(n >= 1 && k >= 1, "decode_slice_complement requires n, k >= 1");
  check_length(z, k * n, allow_suffix, "decode_slice_complement");
  Hyperedge s;
  s.members.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    std::optional<std::uint32_t> zero;
    for (std::size_t l = 0; l < n; ++l) {
      if (z(idx(j * n + l)) != 0) continue;
      if (zero) return std::nullopt;
      zero = static_cast<std::uint32_t>(l);
    }
    if (!zero) return std::nullopt;
    s.members.push_back(*zero);
  }
  if (!distinct(s.members)) return std::nullopt;
  return s;
}

BitVector encode_compressed(const Hyperedge& s, std::size_t n) {
  const std::size_t width = exact_log2(n);
  check_edge(s, n);
  BitVector z(idx(s.arity() * width));
  for (std::size_t j = 0; j < s.arity(); ++j) write_binary(z, j * width, s[j], width);
  return z;
}

std::optional<Hyperedge> decode_compressed(const BitVector& z, std::size_t n, std::size_t k,
                                           bool allow_suffix) {
  const std::size_t width = exact_log2(n);
  require(k >= 1, "decode_compressed requires k >= 1");
  check_length(z, k * width, allow_suffix, "decode_compressed");
  Hyperedge s;
  for (std::size_t j = 0; j < k; ++j) {
    s.members.push_back(static_cast<std::uint32_t>(read_binary(z, j * width, width)));
  }
  if (!distinct(s.members)) return std::nullopt;
  return s;
}

BitVector encode_split_indicator(const Hyperedge& s, std::size_t n, std::size_t k, std::size_t l) {
  require(s.arity() == k + l, "split indicator: hyperedge arity must equal k + l");
  check_edge(s, n);
  BitVector z = BitVector::Zero(idx(2 * n));
  for (std::size_t j = 0; j < k; ++j) z(idx(s[j])) = 1;
  for (std::size_t j = k; j < k + l; ++j) z(idx(n + s[j])) = 1;
  return z;
}

MonomialIndexMap::MonomialIndexMap(std::size_t n) : n_(n) {
  require(n >= 1, "MonomialIndexMap requires n >= 1");
  const std::size_t m = 2 * n;
  dim_out_ = m * (m - 1) / 2 + m + 1;
}

std::size_t MonomialIndexMap::linear(std::size_t i) const {
  require(i < dim_in(), "monomial variable out of range");
  return 1 + i;
}

std::size_t MonomialIndexMap::pair(std::size_t i, std::size_t j) const {
  require(i != j, "pair monomial needs distinct variables");
  if (i > j) std::swap(i, j);
  require(j < dim_in(), "monomial variable out of range");
  const std::size_t m = dim_in();
  const std::size_t offset = i * m - i * (i + 1) / 2;
  return 1 + m + offset + (j - i - 1);
}

std::vector<std::size_t> MonomialIndexMap::monomial(std::size_t index) const {
  require(index < dim_out_, "monomial index out of range");
  if (index == 0) return {};
  const std::size_t m = dim_in();
  if (index <= m) return {index - 1};
  std::size_t rest = index - 1 - m;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const std::size_t row = m - 1 - i;
    if (rest < row) return {i, i + 1 + rest};
    rest -= row;
  }
  throw InvalidInput("monomial index out of range");
}

BitVector encode_monomials(const BitVector& z, const MonomialIndexMap& map) {
  check_length(z, map.dim_in(), false, "encode_monomials");
  const std::size_t m = map.dim_in();
  BitVector out(idx(map.dim_out()));
  out(0) = 1;
  out.segment(1, idx(m)) = z;
  std::size_t pos = 1 + m;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) out(idx(pos++)) = z(idx(i)) & z(idx(j));
  }
  return out;
}

BitVector encode_short(const Hyperedge& s, std::size_t n, std::size_t k) {
  require(s.arity() == k, "short encoding: hyperedge arity must equal k");
  check_edge(s, n);
  BitVector z = BitVector::Zero(idx(n * k));
  for (std::size_t j = 0; j < k; ++j) z(idx(s[j] * k + j)) = 1;
  return z;
}

std::optional<Hyperedge> decode_short(const BitVector& z, std::size_t n, std::size_t k) {
  require(n >= 1 && k >= 1, "decode_short requires n, k >= 1");
  check_length(z, n * k, false, "decode_short");
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  Hyperedge s;
  s.members.assign(k, kUnset);
  for (std::size_t l = 0; l < n; ++l) {
    bool seen = false;
    for (std::size_t j = 0; j < k; ++j) {
      if (z(idx(l * k + j)) == 0) continue;
      if (seen || s.members[j] != kUnset) return std::nullopt;
      seen = true;
      s.members[j] = static_cast<std::uint32_t>(l);
    }
  }
  for (auto member : s.members) {
    if (member == kUnset) return std::nullopt;
  }
  return s;
}

BitVector encode_long_random(const Hyperedge& s, std::size_t n, std::size_t k, Rng& rng) {
  const std::size_t width = exact_log2(n);
  const BitVector short_word = encode_short(s, n, k);
  const std::size_t all_ones = n - 1;
  BitVector z(idx(n * k * width));
  for (std::size_t b = 0; b < n * k; ++b) {
    // Uniform over the other n - 1 patterns: draw from [0, n - 1), which
    // never hits the all-ones value n - 1.
    const std::size_t pattern = short_word(idx(b)) != 0 ? all_ones : rng.below(n - 1);
    write_binary(z, b * width, pattern, width);
  }
  return z;
}

BitVector psi_map(const BitVector& z_long, std::size_t n, std::size_t k) {
  const std::size_t width = exact_log2(n);
  check_length(z_long, n * k * width, false, "psi_map");
  BitVector out(idx(n * k));
  for (std::size_t b = 0; b < n * k; ++b) {
    std::uint8_t all = 1;
    for (std::size_t t = 0; t < width; ++t) all &= z_long(idx(b * width + t));
    out(idx(b)) = all;
  }
  return out;
}

std::size_t multi_slice_width(std::size_t n, std::size_t k, MultiFlavor flavor) {
  return flavor == MultiFlavor::Short ? n * k : n * k * exact_log2(n);
}

std::optional<std::pair<std::size_t, Hyperedge>> locate_multi_encoding(const BitVector& z,
                                                                       std::size_t n, std::size_t k,
                                                                       std::size_t slice_count,
                                                                       MultiFlavor flavor) {
  const std::size_t width = multi_slice_width(n, k, flavor);
  check_length(z, slice_count * width, true, "locate_multi_encoding");
  for (std::size_t t = 0; t < slice_count; ++t) {
    const BitVector slice = z.segment(idx(t * width), idx(width));
    auto edge = flavor == MultiFlavor::Short ? decode_short(slice, n, k)
                                             : decode_short(psi_map(slice, n, k), n, k);
    if (edge) return std::make_pair(t, std::move(*edge));
  }
  return std::nullopt;
}

}  // namespace lprg
