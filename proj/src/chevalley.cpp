#include "rook_orbits/chevalley.hpp"

#include <cstdlib>
#include <functional>
#include <optional>
#include <random>

#include "rook_orbits/linalg.hpp"

namespace rook_orbits {

AlgebraElement AlgebraElement::basis(BasisElement b, const Rational& c) {
  AlgebraElement x;
  x.add(b, c);
  return x;
}

AlgebraElement AlgebraElement::from_nilradical(const RationalVector& x) {
  AlgebraElement out;
  for (Eigen::Index i = 0; i < x.size(); ++i) out.add(BasisElement::e(static_cast<int>(i)), x(i));
  return out;
}

void AlgebraElement::add(BasisElement b, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(b);
  if (it == terms_.end()) {
    terms_.emplace(b, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational AlgebraElement::coeff(BasisElement b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool AlgebraElement::in_nilradical() const {
  for (const auto& [b, c] : terms_)
    if (b.kind != BasisElement::Kind::Positive) return false;
  return true;
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
  for (const auto& [k, c] : b.terms_) a.add(k, c);
  return a;
}

AlgebraElement operator*(const Rational& s, AlgebraElement a) {
  if (s.is_zero()) return {};
  for (auto& [k, c] : a.terms_) c *= s;
  return a;
}

NilpotentAlgebra::NilpotentAlgebra(const RootSystem& sys)
    : dim_(sys.num_positive()),
      roots_(sys.positive_roots()),
      target_(dim_, std::vector<int>(dim_, -1)),
      const_(dim_, std::vector<Rational>(dim_)) {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (auto k = sys.index_of(root_add(roots_[i], roots_[j]))) target_[i][j] = *k;
}

void NilpotentAlgebra::set_bracket(int i, int j, const Rational& c) {
  if (target_[i][j] < 0) throw std::invalid_argument("bracket target is not a positive root");
  const_[i][j] = c;
  const_[j][i] = -c;
}

RationalMatrix NilpotentAlgebra::ad(const RationalVector& x) const {
  RationalMatrix m = RationalMatrix::Zero(dim_, dim_);
  for (int a = 0; a < dim_; ++a) {
    if (x(a).is_zero()) continue;
    for (int b = 0; b < dim_; ++b)
      if (target_[a][b] >= 0 && !const_[a][b].is_zero()) m(target_[a][b], b) += x(a) * const_[a][b];
  }
  return m;
}

RationalVector NilpotentAlgebra::bracket(const RationalVector& x, const RationalVector& y) const {
  return ad(x) * y;
}

std::vector<std::string> NilpotentAlgebra::jacobi_violations() const {
  std::vector<std::string> out;
  auto br = [&](int a, int b, std::map<int, Rational>& acc, const Rational& scale) {
    if (target_[a][b] >= 0 && !const_[a][b].is_zero()) acc[target_[a][b]] += scale * const_[a][b];
  };
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b)
      for (int c = 0; c < dim_; ++c) {
        std::map<int, Rational> acc;
        auto nest = [&](int x, int y, int z) {
          if (target_[y][z] >= 0 && !const_[y][z].is_zero()) br(x, target_[y][z], acc, const_[y][z]);
        };
        nest(a, b, c);
        nest(b, c, a);
        nest(c, a, b);
        for (const auto& [k, v] : acc)
          if (!v.is_zero()) {
            out.push_back("jacobi fails on (" + format_root(roots_[a]) + ", " + format_root(roots_[b]) + ", " +
                          format_root(roots_[c]) + ")");
            break;
          }
      }
  return out;
}

StructureTable::StructureTable(const RootSystem& sys) : sys_(sys), num_pos_(sys.num_positive()), rank_(sys.rank()) {
  build_sums();
  build_constants();
  verify_or_throw();
}

StructureTable::StructureTable(const StructureTable& base, const std::vector<int>& signs) : StructureTable(base) {
  if (static_cast<int>(signs.size()) != num_pos_) throw std::invalid_argument("one sign per positive root expected");
  for (int s : signs)
    if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
  auto sign = [&](int id) { return signs[id < num_pos_ ? id : id - num_pos_]; };
  for (int a = 0; a < 2 * num_pos_; ++a)
    for (int b = 0; b < 2 * num_pos_; ++b)
      if (sum_[a][b] >= 0) n_[a][b] = sign(a) * sign(b) * sign(sum_[a][b]) * base.n_[a][b];
  verify_or_throw();
}

void StructureTable::build_sums() {
  for (int r = 0; r < num_pos_; ++r) signed_roots_.push_back(sys_.root(r));
  for (int r = 0; r < num_pos_; ++r) signed_roots_.push_back(root_neg(sys_.root(r)));
  for (int i = 0; i < 2 * num_pos_; ++i) signed_index_[signed_roots_[i]] = i;
  sum_.assign(2 * num_pos_, std::vector<int>(2 * num_pos_, -1));
  for (int a = 0; a < 2 * num_pos_; ++a)
    for (int b = 0; b < 2 * num_pos_; ++b) {
      auto it = signed_index_.find(root_add(signed_roots_[a], signed_roots_[b]));
      if (it != signed_index_.end()) sum_[a][b] = it->second;
    }
  cartan_.assign(rank_, std::vector<int>(2 * num_pos_, 0));
  for (int i = 0; i < rank_; ++i)
    for (int id = 0; id < 2 * num_pos_; ++id) cartan_[i][id] = sys_.cartan_pairing(i, signed_roots_[id]).to_long();
}

Root StructureTable::signed_root(int id) const { return signed_roots_.at(id); }

int StructureTable::root_string_p(int a, int b) const {
  int p = 0;
  Root t = signed_roots_[b];
  while (true) {
    t = root_sub(t, signed_roots_[a]);
    if (!signed_index_.count(t)) return p;
    ++p;
  }
}

// Extraspecial pairs get N = p+1; the remaining constants follow from the Chevalley relations.
void StructureTable::build_constants() {
  const int total = 2 * num_pos_;
  std::vector<std::vector<std::optional<Rational>>> memo(total, std::vector<std::optional<Rational>>(total));
  std::vector<std::pair<int, int>> extraspecial(num_pos_, {-1, -1});
  for (int xi = 0; xi < num_pos_; ++xi)
    for (int a = 0; a < num_pos_; ++a)
      if (auto b = sys_.index_of(root_sub(sys_.root(xi), sys_.root(a)))) {
        extraspecial[xi] = {a, *b};
        break;
      }
  auto norm = [&](int id) { return sys_.inner_product(signed_roots_[id], signed_roots_[id]); };

  std::function<Rational(int, int)> N = [&](int a, int b) -> Rational {
    if (sum_[a][b] < 0) return Rational(0);
    if (memo[a][b]) return *memo[a][b];
    Rational value;
    const int c = sum_[a][b];
    const bool pa = a < num_pos_;
    const bool pb = b < num_pos_;
    if (pa && pb) {
      auto [al, be] = extraspecial[c];
      if (a == al && b == be) {
        value = Rational(root_string_p(al, be) + 1);
      } else if (a > b) {
        value = -N(b, a);
      } else {
        const int ga = a, de = b;
        Rational t1(0), t2(0);
        if (sum_[be][negate(ga)] >= 0)
          t1 = N(be, negate(ga)) * N(al, negate(de)) / norm(sum_[be][negate(ga)]);
        if (sum_[negate(ga)][al] >= 0)
          t2 = N(negate(ga), al) * N(be, negate(de)) / norm(sum_[negate(ga)][al]);
        value = norm(c) / N(al, be) * (t1 + t2);
      }
    } else if (!pa && !pb) {
      value = -N(negate(a), negate(b));
    } else if (!pa) {
      value = -N(b, a);
    } else if (c < num_pos_) {
      value = norm(c) / norm(a) * N(c, negate(b));
    } else {
      value = norm(c) / norm(b) * N(negate(c), a);
    }
    memo[a][b] = value;
    return value;
  };

  n_.assign(total, std::vector<int>(total, 0));
  for (int a = 0; a < total; ++a)
    for (int b = 0; b < total; ++b) {
      if (sum_[a][b] < 0) continue;
      Rational v = N(a, b);
      if (!v.is_integer() || v.is_zero()) throw InconsistencyError("non-integral structure constant " + v.str());
      n_[a][b] = v.to_long();
    }
}

std::vector<int> StructureTable::coroot(int pos_root) const {
  const Root& g = sys_.root(pos_root);
  Rational gg = sys_.inner_product(g, g);
  std::vector<int> out(rank_);
  for (int i = 0; i < rank_; ++i) out[i] = (Rational(g[i]) * sys_.gram()(i, i) / gg).to_long();
  return out;
}

int StructureTable::position(BasisElement b) const {
  switch (b.kind) {
    case BasisElement::Kind::Positive: return num_pos_ - 1 - b.index;
    case BasisElement::Kind::Cartan: return num_pos_ + b.index;
    case BasisElement::Kind::Negative: return num_pos_ + rank_ + b.index;
  }
  return -1;
}

BasisElement StructureTable::basis_at(int pos) const {
  if (pos < 0 || pos >= dim()) throw std::out_of_range("basis position");
  if (pos < num_pos_) return BasisElement::e(num_pos_ - 1 - pos);
  if (pos < num_pos_ + rank_) return BasisElement::h(pos - num_pos_);
  return BasisElement::f(pos - num_pos_ - rank_);
}

std::string StructureTable::basis_name(int pos) const {
  BasisElement b = basis_at(pos);
  switch (b.kind) {
    case BasisElement::Kind::Positive: return "e[" + sys_.root_string(b.index) + "]";
    case BasisElement::Kind::Cartan: return "h[" + std::to_string(b.index + 1) + "]";
    case BasisElement::Kind::Negative: return "e[-" + sys_.root_string(b.index) + "]";
  }
  return "?";
}

std::vector<std::pair<int, long>> StructureTable::bracket_basis(int p, int q) const {
  using Kind = BasisElement::Kind;
  BasisElement x = basis_at(p), y = basis_at(q);
  std::vector<std::pair<int, long>> out;
  auto id_of = [&](BasisElement b) { return signed_id(b.index, b.kind == Kind::Negative); };
  auto pos_of_id = [&](int id) {
    return id < num_pos_ ? position(BasisElement::e(id)) : position(BasisElement::f(id - num_pos_));
  };
  if (x.kind == Kind::Cartan && y.kind == Kind::Cartan) return out;
  if (x.kind == Kind::Cartan) {
    long c = cartan_[x.index][id_of(y)];
    if (c) out.emplace_back(q, c);
    return out;
  }
  if (y.kind == Kind::Cartan) {
    long c = -cartan_[y.index][id_of(x)];
    if (c) out.emplace_back(p, c);
    return out;
  }
  int a = id_of(x), b = id_of(y);
  if (a == negate(b)) {
    int sign = a < num_pos_ ? 1 : -1;
    std::vector<int> h = coroot(x.index);
    for (int i = 0; i < rank_; ++i)
      if (h[i]) out.emplace_back(num_pos_ + i, sign * h[i]);
    return out;
  }
  if (sum_[a][b] >= 0) out.emplace_back(pos_of_id(sum_[a][b]), n_[a][b]);
  return out;
}

NilpotentAlgebra StructureTable::nilradical() const {
  NilpotentAlgebra alg(sys_);
  for (int a = 0; a < num_pos_; ++a)
    for (int b = a + 1; b < num_pos_; ++b)
      if (sum_[a][b] >= 0) alg.set_bracket(a, b, Rational(n_[a][b]));
  return alg;
}

std::vector<std::string> StructureTable::antisymmetry_violations() const {
  std::vector<std::string> out;
  for (int p = 0; p < dim(); ++p)
    for (int q = 0; q < dim(); ++q) {
      auto x = bracket_basis(p, q), y = bracket_basis(q, p);
      std::map<int, long> acc;
      for (auto [k, v] : x) acc[k] += v;
      for (auto [k, v] : y) acc[k] += v;
      for (auto [k, v] : acc)
        if (v) {
          out.push_back("antisymmetry fails on (" + basis_name(p) + ", " + basis_name(q) + ")");
          break;
        }
    }
  return out;
}

std::vector<std::string> StructureTable::magnitude_violations() const {
  std::vector<std::string> out;
  for (int a = 0; a < 2 * num_pos_; ++a)
    for (int b = 0; b < 2 * num_pos_; ++b) {
      if (sum_[a][b] < 0) {
        if (n_[a][b] != 0) out.push_back("nonzero constant without root sum");
        continue;
      }
      int expected = root_string_p(a, b) + 1;
      if (std::abs(n_[a][b]) != expected)
        out.push_back("|N(" + format_root(signed_roots_[a]) + ", " + format_root(signed_roots_[b]) + ")| = " +
                      std::to_string(std::abs(n_[a][b])) + ", expected " + std::to_string(expected));
    }
  return out;
}

std::vector<std::string> StructureTable::jacobi_violations(long max_triples) const {
  std::vector<std::string> out;
  const int d = dim();
  std::vector<long> acc(d, 0);
  auto nest = [&](int x, int y, int z) {
    for (auto [k, v] : bracket_basis(y, z))
      for (auto [k2, v2] : bracket_basis(x, k)) acc[k2] += v * v2;
  };
  auto check = [&](int a, int b, int c) {
    std::fill(acc.begin(), acc.end(), 0);
    nest(a, b, c);
    nest(b, c, a);
    nest(c, a, b);
    for (long v : acc)
      if (v) {
        out.push_back("jacobi fails on (" + basis_name(a) + ", " + basis_name(b) + ", " + basis_name(c) + ")");
        return;
      }
  };
  long total = static_cast<long>(d) * d * d;
  if (max_triples < 0 || total <= max_triples) {
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b)
        for (int c = b + 1; c < d; ++c) check(a, b, c);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) check(a, a, b);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, d - 1);
    for (long t = 0; t < max_triples; ++t) check(pick(rng), pick(rng), pick(rng));
  }
  return out;
}

void StructureTable::verify_or_throw() const {
  auto fail = [](const std::vector<std::string>& v) {
    if (!v.empty()) throw InconsistencyError("structure table: " + v.front());
  };
  fail(magnitude_violations());
  fail(antisymmetry_violations());
  fail(jacobi_violations(dim() <= 64 ? -1 : 200000));
}

AlgebraElement bracket(const StructureTable& t, const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [bx, cx] : x.terms())
    for (const auto& [by, cy] : y.terms())
      for (auto [k, v] : t.bracket_basis(t.position(bx), t.position(by))) out.add(t.basis_at(k), cx * cy * Rational(v));
  return out;
}

RationalMatrix ad_matrix(const StructureTable& t, const AlgebraElement& x) {
  RationalMatrix m = RationalMatrix::Zero(t.dim(), t.dim());
  for (const auto& [bx, cx] : x.terms()) {
    int p = t.position(bx);
    for (int q = 0; q < t.dim(); ++q)
      for (auto [k, v] : t.bracket_basis(p, q)) m(k, q) += cx * Rational(v);
  }
  return m;
}

int nilpotency_degree(const StructureTable& t, const AlgebraElement& x) {
  if (!x.in_nilradical()) throw std::invalid_argument("element is not in the nilradical");
  return nilpotency_index(ad_matrix(t, x));
}

}  // namespace rook_orbits
