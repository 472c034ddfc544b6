#include "rook_orbits/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace rook_orbits {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto strip = [](std::string t) {
    size_t a = t.find_first_not_of(" \t");
    size_t b = t.find_last_not_of(" \t");
    return a == std::string::npos ? std::string() : t.substr(a, b - a + 1);
  };
  s = strip(s);
  auto parse_int = [](const std::string& t) {
    if (t.empty()) throw std::invalid_argument("empty integer in rational");
    size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (start == t.size()) throw std::invalid_argument("bad integer '" + t + "'");
    for (size_t i = start; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') throw std::invalid_argument("bad integer '" + t + "'");
    return mpz_class(t[0] == '+' ? t.substr(1) : t, 10);
  };
  Rational r;
  size_t slash = s.find('/');
  if (slash == std::string::npos) {
    r.v_ = mpq_class(parse_int(s));
    return r;
  }
  mpz_class num = parse_int(strip(s.substr(0, slash)));
  std::string den_text = strip(s.substr(slash + 1));
  if (!den_text.empty() && den_text[0] == '-') throw std::invalid_argument("negative denominator in '" + s + "'");
  mpz_class den = parse_int(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  r.v_ = mpq_class(num, den);
  r.v_.canonicalize();
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

long Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p()) throw std::range_error("rational " + str() + " is not a machine integer");
  return v_.get_num().get_si();
}

std::string Rational::str() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, unsigned k) {
  Rational out(1);
  for (unsigned i = 0; i < k; ++i) out *= r;
  return out;
}

Rational factorial(unsigned k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(f);
}

}  // namespace rook_orbits
