#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rook_orbits/linalg.hpp"
#include "rook_orbits/sampling.hpp"

using namespace rook_orbits;

namespace {

RationalMatrix random_matrix(int r, int c, std::uint64_t seed, int zero_percent = 30) {
  RationalSampler s(seed);
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = s.coin(zero_percent) ? Rational(0) : s.nonzero();
  return m;
}

}  // namespace

TEST(Linalg, DeterminantMatchesLeibniz) {
  for (int n = 0; n <= 6; ++n)
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      RationalMatrix m = random_matrix(n, n, seed * 31 + n);
      EXPECT_EQ(determinant(m), oracle::leibniz_det(m)) << "n=" << n << " seed=" << seed;
    }
}

TEST(Linalg, DeterminantOfSingularAndPermuted) {
  RationalMatrix m(3, 3);
  m << 0, 1, 2, 0, 3, 4, 0, 5, 6;
  EXPECT_EQ(determinant(m), Rational(0));
  RationalMatrix p(3, 3);
  p << 0, 0, 1, 0, 1, 0, 1, 0, 0;
  EXPECT_EQ(determinant(p), Rational(-1));
  EXPECT_THROW(determinant(RationalMatrix(2, 3)), std::invalid_argument);
}

TEST(Linalg, RankMatchesTwoOracles) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    int r = 1 + static_cast<int>(seed % 5), c = 1 + static_cast<int>((seed / 5) % 5);
    RationalMatrix m = random_matrix(r, c, seed, 60);
    // force a dependent row now and then
    if (r > 1 && seed % 3 == 0) m.row(r - 1) = m.row(0) * Rational(2, 3);
    const int k = static_cast<int>(exact_rank(m));
    EXPECT_EQ(k, oracle::minor_rank(m));
    EXPECT_EQ(k, oracle::gauss_rank(m));
  }
}

TEST(Linalg, NilpotentExpAndInverse) {
  RationalMatrix n = RationalMatrix::Zero(4, 4);
  n(0, 1) = 2;
  n(1, 2) = Rational(1, 3);
  n(0, 3) = -1;
  n(2, 3) = 5;
  ASSERT_TRUE(is_strictly_upper(n));
  EXPECT_EQ(nilpotency_index(n), 4);
  RationalMatrix e = nilpotent_exp(n);
  // exp(N) by the series with explicit powers
  RationalMatrix ref = RationalMatrix::Identity(4, 4), term = RationalMatrix::Identity(4, 4);
  for (int k = 1; k < 4; ++k) {
    term = term * n;
    ref += term / factorial(k);
  }
  EXPECT_EQ(e, ref);
  RationalMatrix inv = unipotent_inverse(e);
  EXPECT_EQ(e * inv, RationalMatrix::Identity(4, 4));
  EXPECT_EQ(nilpotent_exp(RationalMatrix(-n)), inv);
  EXPECT_EQ(nilpotency_index(RationalMatrix::Zero(3, 3)), 1);
  EXPECT_TRUE(is_zero_matrix(RationalMatrix::Zero(2, 2)));
}

TEST(Linalg, Submatrix) {
  RationalMatrix m(3, 3);
  m << 1, 2, 3, 4, 5, 6, 7, 8, 9;
  RationalMatrix s = submatrix(m, {0, 2}, {1, 2});
  RationalMatrix want(2, 2);
  want << 2, 3, 8, 9;
  EXPECT_EQ(s, want);
}
