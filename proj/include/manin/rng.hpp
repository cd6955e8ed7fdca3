#pragma once

#include <cstdint>

namespace manin {

/// Counter-based splittable generator (splitmix64). Same seed, same stream,
/// on every platform; used for all sample sweeps so reports are reproducible
/// byte for byte.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  Rng split() { return Rng(next_u64()); }

 private:
  std::uint64_t state_;
};

}  // namespace manin
