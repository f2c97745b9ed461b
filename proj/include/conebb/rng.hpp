#ifndef CONEBB_RNG_HPP
#define CONEBB_RNG_HPP

#include <cstdint>
#include <random>

namespace conebb {

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Child seed for one (stream, a, b) task, independent of scheduling order.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return mix64(mix64(mix64(seed) ^ a) ^ b);
}

/// Uniform double in [lo, hi] from 53 random bits; exact bounds when lo == hi.
/// Avoids std::uniform_real_distribution, whose output is implementation-defined.
inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  const double x = lo + (hi - lo) * u;
  return x > hi ? hi : x;
}

}  // namespace conebb

#endif  // CONEBB_RNG_HPP
