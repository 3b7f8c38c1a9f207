#pragma once

#include "lprg/encodings.hpp"
#include "lprg/hypothesis.hpp"
#include "lprg/prg.hpp"

namespace lprg {

/// P_x on slice-complement encodings: one positive term per satisfying
/// assignment b, requiring z_{j,l} for every l with x_l != b_j. `dim` pads the
/// input beyond k * n (0 means exactly k * n).
DnfFormula dnf_from_predicate(const Predicate& p, const BitVector& x, std::size_t n,
                              std::size_t dim = 0);

/// 1 iff the first k * n bits are not a slice-complement encoding.
/// Terms: two zeros in one slice, no zero in a slice, two slices sharing an
/// index; k n(n-1)/2 + k + n k(k-1)/2 in total.
DnfFormula dnf_nonencoding(std::size_t n, std::size_t k, std::size_t dim);
std::size_t dnf_nonencoding_term_count(std::size_t n, std::size_t k);

/// dnf_nonencoding OR dnf_from_predicate.
DnfFormula dnf_combined(const Predicate& p, const BitVector& x, std::size_t n, std::size_t dim);

/// Depth-3 circuit over compressed encodings (padded to `dim`): each literal
/// z_{j,l} of dnf_from_predicate becomes an OR gate saying "slice j is not l",
/// and non-encodings (two equal slices) are caught by one AND gate per pair of
/// slices and value.
BooleanCircuit circuit_from_predicate(const Predicate& p, const BitVector& x, std::size_t n,
                                      std::size_t dim = 0);

/// Intersection of k halfspaces over the monomials encoding of
/// encode_split_indicator(S, n, k, l) computing xormaj_{k,l}(x_S).
HalfspaceIntersection intersection_from_xormaj(const BitVector& x, std::size_t n, std::size_t k,
                                               std::size_t l);

/// Sum of one ReLU neuron per term of dnf_from_predicate; no output activation.
ReluNetwork<std::int64_t> nn2_from_dnf(const Predicate& p, const BitVector& x, std::size_t n);
ReluNetwork<std::int64_t> nn2_from_dnf(const DnfFormula& psi);

/// Two ReLUs per halfspace computing sign(<w, z>) exactly on integer inputs,
/// plus a constant neuron subtracting k - 1. 2k + 1 hidden neurons.
ReluNetwork<std::int64_t> nn2_from_intersection(const BitVector& x, std::size_t n, std::size_t k,
                                                std::size_t l);
ReluNetwork<std::int64_t> nn2_from_intersection(const HalfspaceIntersection& g);

std::size_t dfa_encoding_state_count(std::size_t k);
std::size_t dfa_predicate_state_count(std::size_t n, std::size_t k);
std::size_t dfa_full_state_count(std::size_t n, std::size_t k, std::size_t slice_count);

/// Accepts exactly the short encodings among words of length n * k.
Dfa dfa_encoding_checker(std::size_t n, std::size_t k);

/// On short encodings of S accepts iff P(x_S) = 1. Other words: unspecified.
Dfa dfa_predicate_checker(const Predicate& p, const BitVector& x, std::size_t n);

/// Runs both checkers slice by slice over long encodings (each short bit read
/// as a log2(n)-bit block). Accepts iff the first of `slice_count` slices that
/// is a valid encoding of some S has P(x_S) = 1; the tail after the decision
/// is consumed by sink states.
Dfa dfa_full(const Predicate& p, const BitVector& x, std::size_t n, std::size_t slice_count);

/// One monomial per term. Requires positive literals only.
Gf2Polynomial gf2_from_dnf(const DnfFormula& psi);

}  // namespace lprg
