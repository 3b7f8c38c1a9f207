#pragma once

#include <cstdint>
#include <limits>

namespace lprg {

/// Counter-based generator: output i of a stream is a fixed mix of
/// (key, i), so streams are reproducible on every platform and can be split
/// into independent substreams without sharing state.
///
/// All distribution code lives here rather than in <random>, whose
/// distributions are implementation-defined.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : key_(mix(seed ^ 0x6a09e667f3bcc909ULL)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return mix(key_ + (++counter_) * kGamma); }

  /// Independent child stream labelled by `id`. Does not advance this stream.
  Rng split(std::uint64_t id) const {
    Rng child(0);
    child.key_ = mix(key_ ^ mix(id * 0x9fb21c651e98df25ULL + 0xd1b54a32d192ed03ULL));
    return child;
  }

  /// Uniform integer in [0, bound). Lemire's multiply-shift with rejection.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  bool bit() { return ((*this)() >> 63) != 0; }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Standard normal via the Marsaglia polar method (cached second value).
  double normal();

  std::uint64_t counter() const { return counter_; }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace lprg
