#pragma once

#include <cstdint>
#include <random>

namespace harness {

using Rng = std::mt19937_64;

// Uniform integer in [0, n). Avoids std::uniform_int_distribution so draws
// are identical across standard library implementations (seeded runs must
// reproduce bit-for-bit).
inline std::uint64_t rng_below(Rng& rng, std::uint64_t n) {
  // Lemire's nearly-divisionless method with rejection.
  if (n == 0) return 0;
  while (true) {
    std::uint64_t x = rng();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo >= n || lo >= static_cast<std::uint64_t>(-n) % n) {
      return static_cast<std::uint64_t>(m >> 64);
    }
  }
}

inline int rng_index(Rng& rng, int n) {
  return static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(n)));
}

inline bool rng_coin(Rng& rng) { return (rng() & 1u) != 0; }

// Uniform double in [0, 1).
inline double rng_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace harness
