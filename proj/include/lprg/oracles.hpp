#pragma once

#include <memory>
#include <optional>
#include <string>

#include "lprg/gaussian.hpp"
#include "lprg/hypothesis.hpp"
#include "lprg/prg.hpp"

namespace lprg {

struct Example {
  Input input;
  double label = 0.0;
};

/// Stateful single-consumer example oracle over a challenge. Pairs of the
/// challenge are consumed at most once and in order; next() returns nullopt
/// once an emission would need a pair that is not there.
class ExampleStream {
 public:
  virtual ~ExampleStream() = default;

  std::optional<Example> next();

  std::size_t dim() const { return dim_; }
  std::size_t consumed() const { return cursor_; }
  std::size_t emitted() const { return emitted_; }
  bool exhausted() const { return exhausted_; }

 protected:
  ExampleStream(const ChallengeSequence& challenge, std::size_t dim)
      : challenge_(&challenge), dim_(dim) {}

  /// Produces one example, calling take() when it needs the next pair.
  virtual std::optional<Example> produce() = 0;

  /// Next (S_i, y_i) or nullopt at the end of the challenge.
  std::optional<std::pair<const Hyperedge*, std::uint8_t>> take();

  const ChallengeSequence& challenge() const { return *challenge_; }

 private:
  const ChallengeSequence* challenge_;
  std::size_t dim_;
  std::size_t cursor_ = 0;
  std::size_t emitted_ = 0;
  bool exhausted_ = false;
};

/// (slice-complement encoding of S_i, y_i). Dimension k n.
std::unique_ptr<ExampleStream> oracle_plain(const ChallengeSequence& challenge, std::size_t n,
                                            std::size_t k);

/// (monomials of encode_split_indicator(S_i, n, a, k - a), y_i) for a
/// challenge of arity k whose first `a` members are the parity positions.
std::unique_ptr<ExampleStream> oracle_plain_monomials(const ChallengeSequence& challenge,
                                                      std::size_t n, std::size_t k, std::size_t a);

/// Inputs i.i.d. with Pr[0] = 1/n per coordinate. When the first k n bits
/// form a slice-complement encoding they are replaced by the encoding of S_i
/// and the label is y_i; otherwise the label is 1 and no pair is consumed.
std::unique_ptr<ExampleStream> oracle_bernoulli(const ChallengeSequence& challenge, std::size_t n,
                                                std::size_t k, std::size_t d, Rng rng);

/// Uniform inputs; a compressed encoding in the first k log2(n) bits is
/// replaced by that of S_i (label y_i), anything else is labelled 1.
std::unique_ptr<ExampleStream> oracle_uniform_compressed(const ChallengeSequence& challenge,
                                                         std::size_t n, std::size_t k,
                                                         std::size_t d, Rng rng);

/// Bernoulli skeleton as in oracle_bernoulli, lifted to R^{kn} through the
/// truncated normals at c and padded with N(0, 1) to dimension d. Labels: 0
/// for non-encodings or any coordinate in (c, c + 1/n^2); y_i when nothing
/// lies in (c - 1/n^2, c + 2/n^2); otherwise [y_i - N3(z')]_+.
std::unique_ptr<ExampleStream> oracle_gaussian(const ChallengeSequence& challenge, std::size_t n,
                                               std::size_t k, std::size_t d,
                                               const GaussianLiftParams& params, Rng rng);

/// Uniform inputs over {0,1}^d. The first of `slice_count` long slices that
/// decodes to a hyperedge is replaced by a fresh long encoding of S_i (label
/// y_i); if none decodes the label is 0.
std::unique_ptr<ExampleStream> oracle_dfa_uniform(const ChallengeSequence& challenge,
                                                  std::size_t n, std::size_t k, std::size_t d,
                                                  std::size_t slice_count, Rng rng);

/// Label rule of the Gaussian oracle for a prefix z' that rounds to an
/// encoding, given the challenge label y.
double gaussian_label(const RealVector& z_prime, std::uint8_t y, std::size_t n, double c,
                      const ReluNetwork<double>& n3);

enum class GaussianBand { Clean, Inner, Outer };

/// Inner: some coordinate in (c, c + 1/n^2). Outer: none inner but some in
/// (c - 1/n^2, c + 2/n^2). Clean otherwise.
GaussianBand gaussian_band(const RealVector& z_prime, std::size_t n, double c);

}  // namespace lprg
