#pragma once

#include <map>
#include <string>
#include <vector>

#include "rook_orbits/rational.hpp"

namespace rook_orbits {

// Sparse multivariate polynomial with exact coefficients.
class Polynomial {
 public:
  using Monomial = std::vector<int>;

  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int i);

  int nvars() const { return nvars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  std::vector<int> variables() const;

  Rational evaluate(const RationalVector& point) const;
  Polynomial derivative(int var) const;
  std::string str(const std::vector<std::string>& names) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend Polynomial operator-(const Polynomial& p) { return Rational(-1) * p; }
  friend Polynomial operator+(Polynomial a, const Rational& c) { return a += constant(a.nvars_, c); }
  friend Polynomial operator-(Polynomial a, const Rational& c) { return a -= constant(a.nvars_, c); }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void add_term(const Monomial& m, const Rational& c);

  int nvars_;
  std::map<Monomial, Rational> terms_;
};

Polynomial pow(const Polynomial& p, unsigned k);

// Equations p = 0.
struct PolySystem {
  std::vector<Polynomial> equations;

  std::vector<Rational> residuals(const RationalVector& point) const;
  bool satisfied(const RationalVector& point) const;
  RationalMatrix jacobian(const RationalVector& point) const;
};

}  // namespace rook_orbits
