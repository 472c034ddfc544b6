#include "rook_orbits/polynomial.hpp"

#include <set>
#include <stdexcept>

namespace rook_orbits {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::out_of_range("polynomial variable index");
  Polynomial p(nvars);
  Monomial m(nvars, 0);
  m[i] = 1;
  p.add_term(m, Rational(1));
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

std::vector<int> Polynomial::variables() const {
  std::set<int> vars;
  for (const auto& [m, c] : terms_)
    for (int i = 0; i < nvars_; ++i)
      if (m[i]) vars.insert(i);
  return {vars.begin(), vars.end()};
}

Rational Polynomial::evaluate(const RationalVector& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluation point has the wrong dimension");
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      if (m[i]) t *= pow(point(i), static_cast<unsigned>(m[i]));
    total += t;
  }
  return total;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (!m[var]) continue;
    Monomial d = m;
    --d[var];
    out.add_term(d, c * Rational(m[var]));
  }
  return out;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    s += first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
    first = false;
    bool is_const = true;
    for (int e : m) is_const = is_const && e == 0;
    std::string coeff = mag.is_integer() ? mag.numerator().get_str() : "(" + mag.str() + ")";
    if (is_const || mag != Rational(1)) s += coeff;
    bool need_star = !is_const && mag != Rational(1);
    for (int i = 0; i < nvars_; ++i) {
      if (!m[i]) continue;
      if (need_star) s += "*";
      s += names.at(i);
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
      need_star = true;
    }
  }
  return s;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  Polynomial out(nvars_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m(nvars_);
      for (int i = 0; i < nvars_; ++i) m[i] = m1[i] + m2[i];
      out.add_term(m, c1 * c2);
    }
  terms_ = std::move(out.terms_);
  return *this;
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  Polynomial out(p.nvars_);
  for (const auto& [m, c] : p.terms_) out.add_term(m, s * c);
  return out;
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial out = Polynomial::constant(p.nvars(), Rational(1));
  for (unsigned i = 0; i < k; ++i) out *= p;
  return out;
}

std::vector<Rational> PolySystem::residuals(const RationalVector& point) const {
  std::vector<Rational> out;
  for (const Polynomial& p : equations) out.push_back(p.evaluate(point));
  return out;
}

bool PolySystem::satisfied(const RationalVector& point) const {
  for (const Polynomial& p : equations)
    if (!p.evaluate(point).is_zero()) return false;
  return true;
}

RationalMatrix PolySystem::jacobian(const RationalVector& point) const {
  const int n = equations.empty() ? static_cast<int>(point.size()) : equations.front().nvars();
  RationalMatrix j(equations.size(), n);
  for (size_t e = 0; e < equations.size(); ++e)
    for (int v = 0; v < n; ++v) j(e, v) = equations[e].derivative(v).evaluate(point);
  return j;
}

}  // namespace rook_orbits
