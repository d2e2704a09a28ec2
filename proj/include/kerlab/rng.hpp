#pragma once

#include <cstdint>

namespace kerlab {

/// Stateless splitmix64 mix function.  Used as a counter-based
/// generator: every (seed, index) pair maps to one 64-bit word, so
/// site perturbations are reproducible and order-independent.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

/// Uniform double in [0, 1) from the keyed stream (seed, index).
/// The index is hashed through two rounds so that neighbouring keys
/// decorrelate even when seeds differ by small integers.
inline double uniform01(std::uint64_t seed, std::int64_t index) {
  std::uint64_t z = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(index)));
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

/// Uniform double in [-1, 1) from the keyed stream.
inline double uniform_sym(std::uint64_t seed, std::int64_t index) {
  return 2.0 * uniform01(seed, index) - 1.0;
}

}  // namespace kerlab
