#pragma once

#include <optional>
#include <utility>

#include "lprg/prg.hpp"

namespace lprg {

// Slice-complement encoding: k slices of size n; slice j is all ones except a
// zero at S_j. Bit (j, l) lives at z[j * n + l].
BitVector encode_slice_complement(const Hyperedge& s, std::size_t n);

/// Empty unless every slice has exactly one zero and the k indices are
/// distinct. Only the first k * n coordinates of z are inspected when
/// `allow_suffix` is set; otherwise z must have length exactly k * n.
std::optional<Hyperedge> decode_slice_complement(const BitVector& z, std::size_t n, std::size_t k,
                                                 bool allow_suffix = false);

// Compressed encoding: k slices of log2(n) bits, slice j holding member j in
// big-endian binary.
BitVector encode_compressed(const Hyperedge& s, std::size_t n);
std::optional<Hyperedge> decode_compressed(const BitVector& z, std::size_t n, std::size_t k,
                                           bool allow_suffix = false);

/// Indicator of the first k members in [0, n), then of the last l members.
BitVector encode_split_indicator(const Hyperedge& s, std::size_t n, std::size_t k, std::size_t l);

/// Coordinates of the degree <= 2 monomials over 2n variables: the constant
/// first, then each variable, then each pair i < j in lexicographic order.
class MonomialIndexMap {
 public:
  explicit MonomialIndexMap(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t dim_in() const { return 2 * n_; }
  std::size_t dim_out() const { return dim_out_; }

  static constexpr std::size_t constant() { return 0; }
  std::size_t linear(std::size_t i) const;
  /// Coordinate of z_i z_j; order of i and j does not matter, i != j.
  std::size_t pair(std::size_t i, std::size_t j) const;

  /// Inverse of the enumeration: {} for the constant, {i} or {i, j}.
  std::vector<std::size_t> monomial(std::size_t index) const;

 private:
  std::size_t n_;
  std::size_t dim_out_;
};

BitVector encode_monomials(const BitVector& z, const MonomialIndexMap& map);

// Short encoding: n slices of size k; bit (l, j) at z[l * k + j] is 1 iff
// member j equals l.
BitVector encode_short(const Hyperedge& s, std::size_t n, std::size_t k);

/// Empty unless every slice has at most one 1-bit, no member index repeats,
/// and every member index in [0, k) occurs.
std::optional<Hyperedge> decode_short(const BitVector& z, std::size_t n, std::size_t k);

/// Each short bit becomes a log2(n)-bit block: 1 maps to all ones, 0 maps to
/// a uniform pattern other than all ones. Length n * k * log2(n).
BitVector encode_long_random(const Hyperedge& s, std::size_t n, std::size_t k, Rng& rng);

/// Blockwise AND of a long word back to a short word.
BitVector psi_map(const BitVector& z_long, std::size_t n, std::size_t k);

enum class MultiFlavor { Short, Long };

std::size_t multi_slice_width(std::size_t n, std::size_t k, MultiFlavor flavor);

/// First of the `slice_count` slices that decodes to a hyperedge. z may be
/// longer than slice_count slices; the tail is ignored.
std::optional<std::pair<std::size_t, Hyperedge>> locate_multi_encoding(const BitVector& z,
                                                                       std::size_t n, std::size_t k,
                                                                       std::size_t slice_count,
                                                                       MultiFlavor flavor);

/// Big-endian bits of `value` in `width` positions.
void write_binary(BitVector& out, std::size_t offset, std::size_t value, std::size_t width);
std::size_t read_binary(const BitVector& in, std::size_t offset, std::size_t width);

}  // namespace lprg
