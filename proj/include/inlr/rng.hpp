#pragma once

#include <cstdint>

namespace inlr {

// Splittable counter-based generator: the n-th draw of a stream is
// splitmix64(key + n * gamma). Streams derived with split() are independent
// of how many draws the parent has made, so results never depend on the
// order in which workers consume randomness.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : key_(mix(seed ^ 0x6a09e667f3bcc909ULL)) {}

  std::uint64_t next() { return mix(key_ + (++counter_) * kGamma); }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  bool coin() { return (next() >> 63) != 0; }

  Rng split(std::uint64_t i) const {
    Rng r;
    r.key_ = mix(key_ ^ mix(i + 0x9e3779b97f4a7c15ULL));
    return r;
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  static std::uint64_t mix(std::uint64_t z) {
    z += kGamma;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace inlr
