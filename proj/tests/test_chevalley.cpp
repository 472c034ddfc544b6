#include <gtest/gtest.h>

#include "rook_orbits/chevalley.hpp"
#include "rook_orbits/linalg.hpp"
#include "rook_orbits/sampling.hpp"

using namespace rook_orbits;

namespace {

using B = BasisElement;

std::vector<B> full_basis(const StructureTable& t) {
  std::vector<B> out;
  for (int p = 0; p < t.dim(); ++p) out.push_back(t.basis_at(p));
  return out;
}

AlgebraElement el(B b) { return AlgebraElement::basis(b); }

}  // namespace

TEST(Chevalley, G2JacobiByDirectBrackets) {
  RootSystem g2(SystemKind::g2());
  StructureTable t(g2);
  auto basis = full_basis(t);
  ASSERT_EQ(basis.size(), 14u);
  for (B x : basis)
    for (B y : basis) {
      EXPECT_EQ(bracket(t, el(x), el(y)), Rational(-1) * bracket(t, el(y), el(x)));
      for (B z : basis) {
        AlgebraElement j = bracket(t, el(x), bracket(t, el(y), el(z))) + bracket(t, el(y), bracket(t, el(z), el(x))) +
                           bracket(t, el(z), bracket(t, el(x), el(y)));
        ASSERT_TRUE(j.is_zero());
      }
    }
}

TEST(Chevalley, F4TableIsConsistent) {
  RootSystem f4(SystemKind::f4());
  StructureTable t(f4);
  EXPECT_EQ(t.dim(), 52);
  EXPECT_TRUE(t.antisymmetry_violations().empty());
  EXPECT_TRUE(t.magnitude_violations().empty());
  EXPECT_TRUE(t.jacobi_violations().empty());
}

TEST(Chevalley, NonzeroExactlyOnRootSums) {
  for (SystemKind k : {SystemKind::g2(), SystemKind::f4(), SystemKind::a(4)}) {
    RootSystem s(k);
    StructureTable t(s);
    const int p = t.num_positive();
    for (int a = 0; a < 2 * p; ++a)
      for (int b = 0; b < 2 * p; ++b) {
        Root sum = root_add(t.signed_root(a), t.signed_root(b));
        bool root = !is_zero_root(sum) && s.is_root(sum);
        EXPECT_EQ(t.n_const(a, b) != 0, root);
        if (root) EXPECT_EQ(std::abs(t.n_const(a, b)), t.root_string_p(a, b) + 1);
      }
  }
}

TEST(Chevalley, G2RealizedConstants) {
  RootSystem g2(SystemKind::g2());
  StructureTable t(g2);
  int a = *g2.index_of({1, 0}), b = *g2.index_of({0, 1}), ab = *g2.index_of({1, 1}), a2b = *g2.index_of({2, 1}),
      a3b = *g2.index_of({3, 1});
  int c1 = t.n_const(a, b), c2 = t.n_const(a, ab), c3 = t.n_const(a, a2b), c4 = t.n_const(a3b, b),
      c5 = t.n_const(ab, a2b);
  EXPECT_EQ(std::abs(c1), 1);
  EXPECT_EQ(std::abs(c2), 2);
  EXPECT_EQ(std::abs(c3), 3);
  EXPECT_EQ(std::abs(c4), 1);
  EXPECT_EQ(std::abs(c5), 3);
  EXPECT_EQ(c1 * c5, c3 * c4);
  AlgebraElement br = bracket(t, el(B::e(ab)), el(B::e(a2b)));
  EXPECT_EQ(br, AlgebraElement::basis(B::e(*g2.index_of({3, 2})), Rational(c5)));
}

TEST(Chevalley, TypeABracketsAgreeWithMatrices) {
  const int n = 5;
  RootSystem s(SystemKind::a(n - 1));
  StructureTable t(s);
  auto ij = [&](int r) {
    const Root& v = s.root(r);
    int i = 0;
    while (v[i] == 0) ++i;
    int j = i;
    while (j < n - 1 && v[j] == 1) ++j;
    return std::pair<int, int>{i, j};  // 0-based E_ij
  };
  auto unit = [&](int i, int j) {
    RationalMatrix m = RationalMatrix::Zero(n, n);
    m(i, j) = 1;
    return m;
  };
  for (int r = 0; r < s.num_positive(); ++r) {
    auto [i, j] = ij(r);
    for (int k = 0; k < s.rank(); ++k) {
      RationalMatrix h = unit(k, k) - unit(k + 1, k + 1);
      RationalMatrix e = unit(i, j);
      RationalMatrix c = h * e - e * h;
      AlgebraElement br = bracket(t, el(B::h(k)), el(B::e(r)));
      EXPECT_EQ(br.coeff(B::e(r)), c(i, j));
    }
  }
  for (int a = 0; a < s.num_positive(); ++a)
    for (int b = 0; b < s.num_positive(); ++b) {
      auto [i, j] = ij(a);
      auto [k, l] = ij(b);
      RationalMatrix c = unit(i, j) * unit(k, l) - unit(k, l) * unit(i, j);
      AlgebraElement br = bracket(t, el(B::e(a)), el(B::e(b)));
      EXPECT_EQ(br.is_zero(), is_zero_matrix(c));
    }
}

TEST(Chevalley, CartanAction) {
  RootSystem f4(SystemKind::f4());
  StructureTable t(f4);
  for (int b = 0; b < 24; ++b)
    for (int i = 0; i < 4; ++i) {
      AlgebraElement br = bracket(t, el(B::e(b)), el(B::h(i)));
      EXPECT_EQ(br, AlgebraElement::basis(B::e(b), -f4.cartan_pairing(i, f4.root(b))));
    }
  AlgebraElement x = AlgebraElement::basis(B::e(3), Rational(2)) + AlgebraElement::basis(B::h(1), Rational(-1, 3));
  EXPECT_TRUE(bracket(t, x, x).is_zero());
}

TEST(Chevalley, AdMatrixShape) {
  for (SystemKind k : {SystemKind::g2(), SystemKind::f4()}) {
    RootSystem s(k);
    StructureTable t(s);
    RationalSampler rs(11);
    AlgebraElement x = AlgebraElement::from_nilradical(rs.vector(s.num_positive()));
    RationalMatrix m = ad_matrix(t, x);
    EXPECT_TRUE(is_strictly_upper(m));
    EXPECT_TRUE(is_zero_matrix(ad_matrix(t, AlgebraElement())));
    // column q is [x, basis_q]
    for (int q = 0; q < t.dim(); q += 5) {
      AlgebraElement br = bracket(t, x, el(t.basis_at(q)));
      for (int p = 0; p < t.dim(); ++p) EXPECT_EQ(m(p, q), br.coeff(t.basis_at(p)));
    }
  }
}

TEST(Chevalley, NilpotencyDegree) {
  RootSystem g2(SystemKind::g2()), f4(SystemKind::f4());
  StructureTable tg(g2), tf(f4);
  int dg = nilpotency_degree(tg, el(B::e(*g2.index_of({1, 0}))));
  EXPECT_GE(dg, 2);
  EXPECT_LE(dg, 6);
  EXPECT_EQ(nilpotency_degree(tg, AlgebraElement()), 1);
  int df = nilpotency_degree(tf, el(B::e(*f4.index_of({1, 0, 0, 0}))));
  EXPECT_LE(df, 25);
  EXPECT_THROW(nilpotency_degree(tg, el(B::h(0))), std::invalid_argument);
}

TEST(Chevalley, SignRescaledTables) {
  for (SystemKind k : {SystemKind::g2(), SystemKind::f4()}) {
    RootSystem s(k);
    StructureTable base(s);
    RationalSampler rs(5);
    std::vector<int> signs;
    for (int i = 0; i < s.num_positive(); ++i) signs.push_back(rs.coin() ? 1 : -1);
    StructureTable t(base, signs);
    const int p = s.num_positive();
    auto sg = [&](int id) { return signs[id % p]; };
    for (int a = 0; a < 2 * p; ++a)
      for (int b = 0; b < 2 * p; ++b)
        if (t.sum_id(a, b) >= 0) EXPECT_EQ(t.n_const(a, b), sg(a) * sg(b) * sg(t.sum_id(a, b)) * base.n_const(a, b));
    EXPECT_TRUE(t.jacobi_violations().empty());
  }
}

TEST(Chevalley, BasisOrder) {
  RootSystem g2(SystemKind::g2());
  StructureTable t(g2);
  EXPECT_EQ(t.basis_at(0), B::e(5));
  EXPECT_EQ(t.basis_at(5), B::e(0));
  EXPECT_EQ(t.basis_at(6), B::h(0));
  EXPECT_EQ(t.basis_at(8), B::f(0));
  for (int p = 0; p < t.dim(); ++p) EXPECT_EQ(t.position(t.basis_at(p)), p);
}

TEST(Chevalley, NilradicalAlgebraMatchesTable) {
  RootSystem f4(SystemKind::f4());
  StructureTable t(f4);
  NilpotentAlgebra n = t.nilradical();
  EXPECT_TRUE(n.jacobi_violations().empty());
  for (int a = 0; a < 24; ++a)
    for (int b = 0; b < 24; ++b) {
      RationalVector x = RationalVector::Zero(24), y = RationalVector::Zero(24);
      x(a) = 1;
      y(b) = 1;
      RationalVector br = n.bracket(x, y);
      AlgebraElement ref = bracket(t, el(B::e(a)), el(B::e(b)));
      for (int c = 0; c < 24; ++c) EXPECT_EQ(br(c), ref.coeff(B::e(c)));
    }
}
