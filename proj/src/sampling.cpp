#include "rook_orbits/sampling.hpp"

namespace rook_orbits {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) { return splitmix64(splitmix64(master) ^ index); }

int RationalSampler::uniform(int lo, int hi) {
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng_() % span);
}

bool RationalSampler::coin(int percent) { return uniform(0, 99) < percent; }

Rational RationalSampler::small() {
  long num = uniform(-9, 9);
  long den = uniform(1, 3);
  return Rational(num, den);
}

Rational RationalSampler::nonzero() {
  long num = uniform(1, 9) * (coin() ? 1 : -1);
  long den = uniform(1, 3);
  return Rational(num, den);
}

RationalVector RationalSampler::vector(int n) {
  RationalVector v(n);
  for (int i = 0; i < n; ++i) v(i) = small();
  return v;
}

}  // namespace rook_orbits
