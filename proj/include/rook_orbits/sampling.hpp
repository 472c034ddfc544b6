#pragma once

#include <cstdint>
#include <random>

#include "rook_orbits/rational.hpp"

namespace rook_orbits {

std::uint64_t splitmix64(std::uint64_t x);
// Independent per-item seed from a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// Small rationals: numerator in [-9, 9], denominator in {1, 2, 3}.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  Rational small();
  Rational nonzero();
  int uniform(int lo, int hi);
  bool coin(int percent = 50);
  RationalVector vector(int n);
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace rook_orbits
