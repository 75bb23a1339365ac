#pragma once

#include <cstdint>

#include "flowround/rational.hpp"

namespace flowround {

// Deterministic 64-bit generator (splitmix64). The algorithm is part of the
// replay contract: the same seed always yields the same draw sequence, and
// uniform_below draws integers in [0, d) exactly for arbitrary-precision d
// by rejection on 64-bit chunks.
class RngState {
 public:
  explicit RngState(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) for a 64-bit bound (rejection on the top range).
  std::uint64_t below(std::uint64_t bound);

  // Uniform in [0, bound) for an arbitrary positive integer bound.
  mpz_class below(const mpz_class& bound);

  // Stateless mix used to derive per-trial seeds from a base seed.
  static std::uint64_t derive(std::uint64_t base, std::uint64_t counter);

 private:
  std::uint64_t state_;
};

}  // namespace flowround
