#pragma once

// Seeded randomness with a pinned, portable draw discipline.
//
// All stochastic output derives from std::mt19937_64, whose bit stream is
// fixed by the standard, combined with the explicit draw functions below
// (std::uniform_int_distribution is avoided because its mapping from bits to
// values differs between standard libraries).  Golden files record outputs
// of this exact scheme.

#include <cstdint>

#include <random>

namespace edgefog {

// Stateless 64-bit mixer used to derive independent-looking streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Derived seed for replicate `index` of a stream rooted at `base`.  Used by
// the sweep harness: point i of a sweep has base seed (root seed + i), and
// replicate j of that point draws from derive_seed(point seed, j).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(base * 0x100000001B3ull + index);
}

// Uniform draw from [0, k) by rejection; unbiased and identical on every
// platform.
inline std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t k) {
  const std::uint64_t limit = k * (UINT64_MAX / k);
  std::uint64_t x;
  do {
    x = gen();
  } while (x >= limit);
  return x % k;
}

// Uniform integer in [lo, hi], inclusive.
inline long uniform_int(std::mt19937_64& gen, long lo, long hi) {
  return lo + static_cast<long>(
                  uniform_below(gen, static_cast<std::uint64_t>(hi - lo) + 1));
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace edgefog
