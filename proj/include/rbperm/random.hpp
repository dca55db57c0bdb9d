#ifndef RBPERM_RANDOM_HPP
#define RBPERM_RANDOM_HPP

#include <cstdint>
#include <random>

namespace rbperm {

/// SplitMix64 finalizer; bijective on 64-bit words with strong avalanche.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derives the seed of the k-th sub-stream of a batch. Independent of thread
/// scheduling by construction.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed + (index + 1) * 0x9e3779b97f4a7c15ULL);
}

/// Seedable pseudo-random source. Identical seeds yield identical draw
/// sequences on every platform (mt19937_64 is fully specified). Unit reals
/// carry 53 random bits; bounded integers are drawn by rejection, so there is
/// no modulo bias. One instance per logical thread.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : gen_(mix64(seed)) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform real in [0, 1).
  double next_unit() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, m), m >= 1.
  std::int64_t next_below(std::int64_t m) {
    const auto um = static_cast<std::uint64_t>(m);
    if (um <= 1) return 0;
    const int shift = 64 - bit_width(um - 1);
    for (;;) {
      const std::uint64_t v = gen_() >> shift;
      if (v < um) return static_cast<std::int64_t>(v);
    }
  }

 private:
  static int bit_width(std::uint64_t v) {
    int w = 0;
    while (v) {
      ++w;
      v >>= 1;
    }
    return w;
  }
  std::mt19937_64 gen_;
};

}  // namespace rbperm

#endif
