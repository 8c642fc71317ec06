#ifndef SELFPOWER_RNG_HPP
#define SELFPOWER_RNG_HPP

#include <cstdint>

namespace selfpower {

// SplitMix64 (Sebastiano Vigna, public domain).  Every random stream in this
// project is one of these, so any implementation language can reproduce the
// output bit for bit.  Test vectors live in README.md and tests/test_rng.cpp.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Deterministic substream derivation: the per-key stream is seeded with the
// first output of SplitMix64(master XOR key*0x9E3779B97F4A7C15).
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t key) {
  return SplitMix64(master ^ (key * 0x9E3779B97F4A7C15ull)).next();
}

// Uniform draw from [0, n) by rejection below the largest multiple of n
// representable in 64 bits (bias-free, bit-exact across platforms).
inline std::uint64_t uniform_below(SplitMix64& g, std::uint64_t n) {
  std::uint64_t limit = (~std::uint64_t(0) / n) * n;
  std::uint64_t r;
  do {
    r = g.next();
  } while (r >= limit);
  return r % n;
}

// Uniform draw from [lo, hi] inclusive.
inline std::uint64_t uniform_in(SplitMix64& g, std::uint64_t lo, std::uint64_t hi) {
  return lo + uniform_below(g, hi - lo + 1);
}

}  // namespace selfpower

#endif
