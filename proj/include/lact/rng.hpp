#pragma once

#include <cstdint>

namespace lact {

// splitmix64: tiny deterministic generator, identical output on every
// platform. Used wherever a "deterministic by seed" contract is promised.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform draw from {0, ..., n-1}; n must be positive.
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

 private:
  std::uint64_t state_;
};

// Stable per-item seed derivation for parallel sweeps.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  Rng r(seed ^ (0x632be59bd9b4e019ULL + index * 0x9e3779b97f4a7c15ULL));
  return r.next();
}

}  // namespace lact
