#pragma once

#include <bit>
#include <cstdint>
#include <random>

namespace gramsteg {

// Deterministic 64-bit-seeded random stream. mt19937_64 output is fixed by
// the standard, and bounded draws use bitmask rejection, so a given seed
// produces identical results on every platform.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform draw from [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t mask =
        ~std::uint64_t{0} >> std::countl_zero(bound - 1);
    for (;;) {
      const std::uint64_t v = gen_() & mask;
      if (v < bound) return v;
    }
  }

 private:
  std::mt19937_64 gen_;
};

// Fresh seed from OS entropy, for when the caller supplies none.
std::uint64_t entropy_seed();

}  // namespace gramsteg
