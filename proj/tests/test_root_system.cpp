#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rook_orbits/root_system.hpp"

using namespace rook_orbits;

namespace {

std::set<Root> as_set(const RootSystem& s) { return {s.positive_roots().begin(), s.positive_roots().end()}; }

}  // namespace

TEST(RootSystem, Counts) {
  EXPECT_EQ(RootSystem(SystemKind::g2()).num_positive(), 6);
  EXPECT_EQ(RootSystem(SystemKind::f4()).num_positive(), 24);
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(RootSystem(SystemKind::a(n - 1)).num_positive(), n * (n - 1) / 2);
  EXPECT_EQ(RootSystem(SystemKind::a(1)).positive_roots(), std::vector<Root>{{1}});
}

TEST(RootSystem, MatchesWeylOrbitOracle) {
  for (SystemKind k : {SystemKind::g2(), SystemKind::f4(), SystemKind::a(3), SystemKind::a(6)}) {
    RootSystem s(k);
    EXPECT_EQ(as_set(s), oracle::weyl_positive_roots(s.gram())) << k.name();
  }
}

TEST(RootSystem, F4MatchesEpsilonCoordinates) {
  RootSystem f4(SystemKind::f4());
  auto simple = oracle::f4_simple_eps();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(f4.gram()(i, j), oracle::dot(simple[i], simple[j]));
  std::set<Root> eps;
  for (const auto& v : oracle::f4_positive_eps()) eps.insert(oracle::f4_coeffs(v));
  EXPECT_EQ(eps.size(), 24u);
  EXPECT_EQ(as_set(f4), eps);
  EXPECT_EQ(f4.inner_product({0, 0, 1, 0}, {0, 0, 0, 1}), Rational(-1, 2));
}

TEST(RootSystem, G2Geometry) {
  RootSystem g2(SystemKind::g2());
  Root a{1, 0}, b{0, 1};
  EXPECT_EQ(g2.inner_product(a, a), Rational(1));
  EXPECT_EQ(g2.inner_product(b, b), Rational(3));
  EXPECT_EQ(g2.inner_product(a, b), Rational(-3, 2));
  EXPECT_TRUE(g2.is_positive_root({2, 1}));
  EXPECT_FALSE(g2.is_positive_root({2, 0}));
  EXPECT_TRUE(g2.is_root({-3, -2}));
  EXPECT_FALSE(RootSystem(SystemKind::f4()).is_positive_root({1, 0, 1, 0}));
}

TEST(RootSystem, CanonicalOrder) {
  for (SystemKind k : {SystemKind::g2(), SystemKind::f4(), SystemKind::a(4)}) {
    RootSystem s(k);
    for (int i = 0; i + 1 < s.num_positive(); ++i) {
      ASSERT_LE(s.height(i), s.height(i + 1));
      if (s.height(i) == s.height(i + 1)) EXPECT_LT(s.root(i), s.root(i + 1));
      EXPECT_EQ(*s.index_of(s.root(i)), i);
      EXPECT_EQ(*s.parse_root(s.root_string(i)), i);
    }
  }
}

TEST(RootSystem, SingularSets) {
  RootSystem g2(SystemKind::g2());
  auto names = [&](const std::vector<int>& v) {
    std::set<Root> out;
    for (int i : v) out.insert(g2.root(i));
    return out;
  };
  EXPECT_EQ(names(g2.singular_set(*g2.index_of({2, 1}))), (std::set<Root>{{1, 0}, {1, 1}}));
  EXPECT_EQ(names(g2.singular_set(*g2.index_of({3, 2}))), (std::set<Root>{{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
  for (SystemKind k : {SystemKind::g2(), SystemKind::f4(), SystemKind::a(5)}) {
    RootSystem s(k);
    for (int i = 0; i < s.rank(); ++i) EXPECT_TRUE(s.singular_set(*s.index_of(s.simple_root(i))).empty());
    for (int g = 0; g < s.num_positive(); ++g) {
      auto sg = s.singular_set(g);
      EXPECT_EQ(std::count(sg.begin(), sg.end(), g), 0);
      for (int a : sg) EXPECT_TRUE(s.is_positive_root(root_sub(s.root(g), s.root(a))));
    }
  }
}

TEST(RootSystem, SumDecompositions) {
  RootSystem f4(SystemKind::f4()), g2(SystemKind::g2());
  auto d = f4.sum_decompositions({1, 0, 1, 0});
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.front().size(), 2u);
  EXPECT_EQ(g2.sum_decompositions({1, 1}).size(), 2u);
  EXPECT_EQ(g2.sum_decompositions({0, 0}).size(), 1u);
  EXPECT_TRUE(g2.sum_decompositions({-1, 0}).empty());
  // every decomposition sums back and is non-decreasing
  for (const auto& dec : f4.sum_decompositions({1, 2, 2, 1})) {
    Root s(4, 0);
    for (size_t i = 0; i < dec.size(); ++i) {
      s = root_add(s, f4.root(dec[i]));
      if (i) EXPECT_LE(dec[i - 1], dec[i]);
    }
    EXPECT_EQ(s, (Root{1, 2, 2, 1}));
  }
}

TEST(RootSystem, LeqIsPartialOrderAndMatchesCone) {
  for (SystemKind k : {SystemKind::g2(), SystemKind::f4()}) {
    RootSystem s(k);
    const int p = s.num_positive();
    for (int a = 0; a < p; ++a) {
      EXPECT_TRUE(s.leq(a, a));
      for (int b = 0; b < p; ++b) {
        bool cone = !s.sum_decompositions(root_sub(s.root(b), s.root(a))).empty();
        EXPECT_EQ(s.leq(a, b), cone);
        if (a != b && s.leq(a, b)) EXPECT_FALSE(s.leq(b, a));
        for (int c = 0; c < p; ++c)
          if (s.leq(a, b) && s.leq(b, c)) EXPECT_TRUE(s.leq(a, c));
      }
    }
  }
  RootSystem f4(SystemKind::f4());
  EXPECT_TRUE(f4.less(*f4.index_of({0, 1, 2, 0}), *f4.index_of({0, 1, 2, 2})));
}

TEST(RootSystem, TypeAShortcut) {
  // e_i - e_j <= e_r - e_s iff r <= i and s >= j
  const int n = 7;
  RootSystem a(SystemKind::a(n - 1));
  auto idx = [&](int i, int j) {
    Root r(n - 1, 0);
    for (int k = i - 1; k <= j - 2; ++k) r[k] = 1;
    return *a.index_of(r);
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int r = 1; r <= n; ++r)
        for (int s = r + 1; s <= n; ++s) EXPECT_EQ(a.leq(idx(i, j), idx(r, s)), r <= i && s >= j);
  RootSystem a9(SystemKind::a(9));
  Root x(9, 0), y(9, 0);
  x[3] = 1;
  for (int k = 0; k < 5; ++k) y[k] = 1;
  EXPECT_TRUE(a9.leq(x, y));
}

TEST(RootSystem, Parse) {
  EXPECT_EQ(SystemKind::parse("g2"), SystemKind::g2());
  EXPECT_EQ(SystemKind::parse("F4"), SystemKind::f4());
  EXPECT_EQ(SystemKind::parse("a3"), SystemKind::a(3));
  EXPECT_THROW(SystemKind::parse("e8"), std::invalid_argument);
  EXPECT_THROW(parse_root_coeffs("1,x"), std::invalid_argument);
  EXPECT_EQ(format_root({1, 2, 3, 2}), "1,2,3,2");
}
