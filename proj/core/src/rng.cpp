#include "flowround/rng.hpp"

#include "flowround/errors.hpp"

namespace flowround {

std::uint64_t RngState::below(std::uint64_t bound) {
  if (bound == 0) fail(Errc::internal, "uniform draw with zero bound");
  // Reject draws from the tail so every residue is equally likely.
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % bound;
}

mpz_class RngState::below(const mpz_class& bound) {
  if (bound <= 0) fail(Errc::internal, "uniform draw with non-positive bound");
  if (mpz_fits_ulong_p(bound.get_mpz_t()) && bound.get_ui() <= UINT64_MAX)
    return mpz_class(static_cast<unsigned long>(below(static_cast<std::uint64_t>(bound.get_ui()))));

  size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  size_t chunks = (bits + 63) / 64;
  mpz_class mask = (mpz_class(1) << bits) - 1;
  while (true) {
    mpz_class x = 0;
    for (size_t i = 0; i < chunks; ++i) {
      std::uint64_t w = next_u64();
      mpz_class chunk = static_cast<unsigned long>(w >> 32);
      chunk <<= 32;
      chunk += static_cast<unsigned long>(w & 0xffffffffULL);
      x <<= 64;
      x += chunk;
    }
    x &= mask;
    if (x < bound) return x;
  }
}

std::uint64_t RngState::derive(std::uint64_t base, std::uint64_t counter) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (counter + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace flowround
