#include <gtest/gtest.h>

#include "rook_orbits/polynomial.hpp"
#include "rook_orbits/sampling.hpp"

using namespace rook_orbits;

namespace {

// p(x, y, z) = 3x^2 y - z/2 + 1
Polynomial sample_poly() {
  Polynomial x = Polynomial::variable(3, 0), y = Polynomial::variable(3, 1), z = Polynomial::variable(3, 2);
  return Rational(3) * x * x * y - Rational(1, 2) * z + Rational(1);
}

Rational direct(const RationalVector& p) { return Rational(3) * p(0) * p(0) * p(1) - p(2) / Rational(2) + Rational(1); }

}  // namespace

TEST(Polynomial, EvaluateMatchesDirect) {
  Polynomial p = sample_poly();
  RationalSampler s(3);
  for (int k = 0; k < 100; ++k) {
    RationalVector v = s.vector(3);
    EXPECT_EQ(p.evaluate(v), direct(v));
  }
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p.variables(), (std::vector<int>{0, 1, 2}));
}

TEST(Polynomial, Derivatives) {
  Polynomial p = sample_poly();
  Polynomial x = Polynomial::variable(3, 0), y = Polynomial::variable(3, 1);
  EXPECT_EQ(p.derivative(0), Rational(6) * x * y);
  EXPECT_EQ(p.derivative(1), Rational(3) * x * x);
  EXPECT_EQ(p.derivative(2), Polynomial::constant(3, Rational(-1, 2)));
  EXPECT_TRUE(p.derivative(0).derivative(0).derivative(0).is_zero());
}

TEST(Polynomial, ArithmeticAndCancellation) {
  Polynomial p = sample_poly();
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p + p, Rational(2) * p);
  EXPECT_EQ(-(-p), p);
  EXPECT_TRUE(Polynomial::constant(3, Rational(0)).is_zero());
  RationalSampler s(5);
  for (int k = 0; k < 50; ++k) {
    RationalVector v = s.vector(3);
    Rational pv = direct(v);
    EXPECT_EQ((p * p).evaluate(v), pv * pv);
    EXPECT_EQ(pow(p, 3).evaluate(v), pv * pv * pv);
    EXPECT_EQ((p - Rational(4)).evaluate(v), pv - Rational(4));
  }
  EXPECT_EQ(pow(p, 0), Polynomial::constant(3, Rational(1)));
}

TEST(Polynomial, Formatting) {
  Polynomial x = Polynomial::variable(2, 0);
  std::string s = (x * x - Rational(2)).str({"a", "b"});
  EXPECT_NE(s.find('a'), std::string::npos);
  EXPECT_EQ(s.find('b'), std::string::npos);
  EXPECT_EQ(Polynomial(2).str({"a", "b"}), "0");
}

TEST(Polynomial, SystemResidualsAndJacobian) {
  Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  PolySystem sys{{x * y - Rational(1), x - y}};
  RationalVector pt(2);
  pt << Rational(1), Rational(1);
  EXPECT_TRUE(sys.satisfied(pt));
  pt << Rational(2), Rational(3);
  EXPECT_FALSE(sys.satisfied(pt));
  EXPECT_EQ(sys.residuals(pt), (std::vector<Rational>{Rational(5), Rational(-1)}));
  RationalMatrix j = sys.jacobian(pt);
  ASSERT_EQ(j.rows(), 2);
  ASSERT_EQ(j.cols(), 2);
  EXPECT_EQ(j(0, 0), Rational(3));
  EXPECT_EQ(j(0, 1), Rational(2));
  EXPECT_EQ(j(1, 0), Rational(1));
  EXPECT_EQ(j(1, 1), Rational(-1));
}
