#pragma once

#include <cmath>
#include <cstdint>

namespace structgraph {

// Deterministic splitmix64 generator. Identical state yields the identical
// draw sequence on every platform; all randomness in the project flows
// through this type.
struct Rng {
  std::uint64_t state = 0;

  Rng() = default;
  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next_u64() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 bits of mantissa.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Integer in [0, n), n > 0.
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

  // Box-Muller on two uniform draws. std == 0 returns the mean exactly.
  double gauss(double mean, double std) {
    double u1 = 1.0 - next_double();  // (0, 1], keeps log finite
    double u2 = next_double();
    double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    return mean + std * z;
  }
};

// Per-purpose child seed from one root seed; fixed offsets keep independent
// streams (init, shuffle, augment, ...) decoupled but reproducible.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t purpose) {
  std::uint64_t z = root + (purpose + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace structgraph
