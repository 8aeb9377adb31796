#pragma once

#include <cstdint>

namespace speclab::rng {

// splitmix64 finalizer.  All randomness in the library is counter-based:
// a draw is a pure function of (seed, counter), so extending a sequence
// never perturbs earlier entries and realizations can run concurrently.
inline std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Hash of a (seed, counter) pair.
inline std::uint64_t at(std::uint64_t seed, std::uint64_t counter) {
  return mix(seed ^ mix(counter + 0x632be59bd9b4e019ULL));
}

// Derive an independent stream seed for one ensemble realization.
inline std::uint64_t derive(std::uint64_t seed, std::uint64_t realization) {
  return mix(mix(seed) ^ (realization * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
}

// Uniform double in [0, 1), 53 mantissa bits.
inline double uniform01(std::uint64_t seed, std::uint64_t counter) {
  return static_cast<double>(at(seed, counter) >> 11) * 0x1.0p-53;
}

// Uniform double in [-1, 1).
inline double uniform_sym(std::uint64_t seed, std::uint64_t counter) {
  return 2.0 * uniform01(seed, counter) - 1.0;
}

}  // namespace speclab::rng
