// Copyright (c) 2026, the gapkit authors
// See LICENSE.txt for license details

#ifndef GAPKIT_RNG_HPP_
#define GAPKIT_RNG_HPP_

#include <cstdint>

namespace gapkit {

// splitmix64 finalizer; bijective on uint64.
inline uint64_t Mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Keyed counter-based generator: a splitmix64 stream whose initial state is a
// pure function of (seed, stream). Every draw sequence is fixed by the
// integer arithmetic here, independent of platform, compiler, or thread
// count. Generators hand out one stream per fixed-size block of work so
// parallel producers stay byte-reproducible.
class Rng {
 public:
  explicit Rng(uint64_t seed, uint64_t stream = 0)
      : state_(Mix64(seed) ^ Mix64(~stream)) {}

  uint64_t Next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); masked rejection, so no modulo bias. bound >= 1.
  uint32_t NextBounded(uint32_t bound) {
    uint32_t mask = bound - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    while (true) {
      uint32_t v = static_cast<uint32_t>(Next() >> 32) & mask;
      if (v < bound)
        return v;
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double NextUnit() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

}  // namespace gapkit

#endif  // GAPKIT_RNG_HPP_
