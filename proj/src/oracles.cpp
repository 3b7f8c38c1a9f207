#include "lprg/oracles.hpp"

#include "lprg/encodings.hpp"
#include "lprg/gaussian_networks.hpp"

namespace lprg {

std::optional<Example> ExampleStream::next() {
  if (exhausted_) return std::nullopt;
  auto example = produce();
  if (!example) {
    exhausted_ = true;
    return std::nullopt;
  }
  ++emitted_;
  return example;
}

std::optional<std::pair<const Hyperedge*, std::uint8_t>> ExampleStream::take() {
  if (cursor_ >= challenge_->size()) return std::nullopt;
  const std::size_t i = cursor_++;
  return std::make_pair(&challenge_->edge(i), challenge_->label(i));
}

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

void check_challenge(const ChallengeSequence& challenge, std::size_t n, std::size_t k) {
  require(challenge.n() == n, "oracle n differs from the challenge");
  require(challenge.k() == k, "oracle k differs from the challenge");
}

BitVector bernoulli_bits(std::size_t length, std::size_t n, Rng& rng) {
  BitVector z(idx(length));
  for (std::size_t i = 0; i < length; ++i) z(idx(i)) = rng.below(n) == 0 ? 0 : 1;
  return z;
}

class PlainStream final : public ExampleStream {
 public:
  PlainStream(const ChallengeSequence& c, std::size_t n, std::size_t k)
      : ExampleStream(c, k * n), n_(n) {}

 protected:
  std::optional<Example> produce() override {
    auto pair = take();
    if (!pair) return std::nullopt;
    return Example{encode_slice_complement(*pair->first, n_), static_cast<double>(pair->second)};
  }

 private:
  std::size_t n_;
};

class PlainMonomialsStream final : public ExampleStream {
 public:
  PlainMonomialsStream(const ChallengeSequence& c, std::size_t n, std::size_t k, std::size_t a)
      : ExampleStream(c, MonomialIndexMap(n).dim_out()), n_(n), k_(k), a_(a), map_(n) {}

 protected:
  std::optional<Example> produce() override {
    auto pair = take();
    if (!pair) return std::nullopt;
    const BitVector split = encode_split_indicator(*pair->first, n_, a_, k_ - a_);
    return Example{encode_monomials(split, map_), static_cast<double>(pair->second)};
  }

 private:
  std::size_t n_, k_, a_;
  MonomialIndexMap map_;
};

class BernoulliStream final : public ExampleStream {
 public:
  BernoulliStream(const ChallengeSequence& c, std::size_t n, std::size_t k, std::size_t d, Rng rng)
      : ExampleStream(c, d), n_(n), k_(k), rng_(rng) {}

 protected:
  std::optional<Example> produce() override {
    BitVector z = bernoulli_bits(dim(), n_, rng_);
    if (!decode_slice_complement(z, n_, k_, true)) return Example{std::move(z), 1.0};
    auto pair = take();
    if (!pair) return std::nullopt;
    z.head(idx(k_ * n_)) = encode_slice_complement(*pair->first, n_);
    return Example{std::move(z), static_cast<double>(pair->second)};
  }

 private:
  std::size_t n_, k_;
  Rng rng_;
};

class UniformCompressedStream final : public ExampleStream {
 public:
  UniformCompressedStream(const ChallengeSequence& c, std::size_t n, std::size_t k, std::size_t d,
                          Rng rng)
      : ExampleStream(c, d), n_(n), k_(k), rng_(rng) {}

 protected:
  std::optional<Example> produce() override {
    BitVector z = random_bits(dim(), rng_);
    if (!decode_compressed(z, n_, k_, true)) return Example{std::move(z), 1.0};
    auto pair = take();
    if (!pair) return std::nullopt;
    const BitVector prefix = encode_compressed(*pair->first, n_);
    z.head(prefix.size()) = prefix;
    return Example{std::move(z), static_cast<double>(pair->second)};
  }

 private:
  std::size_t n_, k_;
  Rng rng_;
};

class GaussianStream final : public ExampleStream {
 public:
  GaussianStream(const ChallengeSequence& c, std::size_t n, std::size_t k, std::size_t d,
                 const GaussianLiftParams& params, Rng rng)
      : ExampleStream(c, d),
        n_(n),
        k_(k),
        params_(params),
        n3_(nn3_tent_network<double>(n, k, params.c)),
        rng_(rng) {}

 protected:
  std::optional<Example> produce() override {
    const std::size_t kn = k_ * n_;
    BitVector z = bernoulli_bits(kn, n_, rng_);
    std::optional<std::uint8_t> y;
    if (decode_slice_complement(z, n_, k_)) {
      auto pair = take();
      if (!pair) return std::nullopt;
      z = encode_slice_complement(*pair->first, n_);
      y = pair->second;
    }
    RealVector out(idx(dim()));
    const RealVector prefix = gaussian_lift(z, params_, rng_);
    out.head(idx(kn)) = prefix;
    for (std::size_t i = kn; i < dim(); ++i) out(idx(i)) = rng_.normal();
    const double label = y ? gaussian_label(prefix, *y, n_, params_.c, n3_) : 0.0;
    return Example{std::move(out), label};
  }

 private:
  std::size_t n_, k_;
  GaussianLiftParams params_;
  ReluNetwork<double> n3_;
  Rng rng_;
};

class DfaUniformStream final : public ExampleStream {
 public:
  DfaUniformStream(const ChallengeSequence& c, std::size_t n, std::size_t k, std::size_t d,
                   std::size_t slice_count, Rng rng)
      : ExampleStream(c, d), n_(n), k_(k), slice_count_(slice_count), rng_(rng) {}

 protected:
  std::optional<Example> produce() override {
    BitVector z = random_bits(dim(), rng_);
    const auto found = locate_multi_encoding(z, n_, k_, slice_count_, MultiFlavor::Long);
    if (!found) return Example{std::move(z), 0.0};
    auto pair = take();
    if (!pair) return std::nullopt;
    const std::size_t width = multi_slice_width(n_, k_, MultiFlavor::Long);
    z.segment(idx(found->first * width), idx(width)) =
        encode_long_random(*pair->first, n_, k_, rng_);
    return Example{std::move(z), static_cast<double>(pair->second)};
  }

 private:
  std::size_t n_, k_, slice_count_;
  Rng rng_;
};

}  // namespace

GaussianBand gaussian_band(const RealVector& z_prime, std::size_t n, double c) {
  const double step = 1.0 / static_cast<double>(n * n);
  bool outer = false;
  for (Eigen::Index i = 0; i < z_prime.size(); ++i) {
    const double t = z_prime(i);
    if (t > c && t < c + step) return GaussianBand::Inner;
    if (t > c - step && t < c + 2 * step) outer = true;
  }
  return outer ? GaussianBand::Outer : GaussianBand::Clean;
}

double gaussian_label(const RealVector& z_prime, std::uint8_t y, std::size_t n, double c,
                      const ReluNetwork<double>& n3) {
  switch (gaussian_band(z_prime, n, c)) {
    case GaussianBand::Clean:
      return static_cast<double>(y);
    case GaussianBand::Inner:
      return 0.0;
    case GaussianBand::Outer:
      break;
  }
  return std::max(static_cast<double>(y) - n3(z_prime), 0.0);
}

std::unique_ptr<ExampleStream> oracle_plain(const ChallengeSequence& challenge, std::size_t n,
                                            std::size_t k) {
  check_challenge(challenge, n, k);
  return std::make_unique<PlainStream>(challenge, n, k);
}

std::unique_ptr<ExampleStream> oracle_plain_monomials(const ChallengeSequence& challenge,
                                                      std::size_t n, std::size_t k,
                                                      std::size_t a) {
  check_challenge(challenge, n, k);
  require(a >= 1 && a < k, "monomials oracle needs 1 <= a < k");
  return std::make_unique<PlainMonomialsStream>(challenge, n, k, a);
}

std::unique_ptr<ExampleStream> oracle_bernoulli(const ChallengeSequence& challenge, std::size_t n,
                                                std::size_t k, std::size_t d, Rng rng) {
  check_challenge(challenge, n, k);
  require(d >= k * n, "Bernoulli oracle needs d >= k * n");
  return std::make_unique<BernoulliStream>(challenge, n, k, d, rng);
}

std::unique_ptr<ExampleStream> oracle_uniform_compressed(const ChallengeSequence& challenge,
                                                         std::size_t n, std::size_t k,
                                                         std::size_t d, Rng rng) {
  check_challenge(challenge, n, k);
  require(d >= k * exact_log2(n), "compressed oracle needs d >= k * log2(n)");
  return std::make_unique<UniformCompressedStream>(challenge, n, k, d, rng);
}

std::unique_ptr<ExampleStream> oracle_gaussian(const ChallengeSequence& challenge, std::size_t n,
                                               std::size_t k, std::size_t d,
                                               const GaussianLiftParams& params, Rng rng) {
  check_challenge(challenge, n, k);
  require(d >= k * n, "Gaussian oracle needs d >= k * n");
  require(params.n == n, "Gaussian lift parameters are for a different n");
  return std::make_unique<GaussianStream>(challenge, n, k, d, params, rng);
}

std::unique_ptr<ExampleStream> oracle_dfa_uniform(const ChallengeSequence& challenge,
                                                  std::size_t n, std::size_t k, std::size_t d,
                                                  std::size_t slice_count, Rng rng) {
  check_challenge(challenge, n, k);
  require(slice_count >= 1, "DFA oracle needs at least one slice");
  require(d >= slice_count * multi_slice_width(n, k, MultiFlavor::Long),
          "DFA oracle needs d >= slice_count * n * k * log2(n)");
  return std::make_unique<DfaUniformStream>(challenge, n, k, d, slice_count, rng);
}

}  // namespace lprg
