#include "rook_orbits/andre.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rook_orbits/linalg.hpp"

namespace rook_orbits {

TypeA::TypeA(int n) : n_(n), sys_(SystemKind::a(n >= 2 ? n - 1 : 1)) {
  if (n < 2) throw std::invalid_argument("type A matrices need n >= 2");
  ij_.resize(sys_.num_positive());
  index_.assign(n + 1, std::vector<int>(n + 1, -1));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Root r(n - 1, 0);
      for (int k = i - 1; k <= j - 2; ++k) r[k] = 1;
      int idx = *sys_.index_of(r);
      ij_[idx] = {i, j};
      index_[i][j] = idx;
    }
  for (int r = 0; r < sys_.num_positive(); ++r) t_order_.push_back(r);
  std::sort(t_order_.begin(), t_order_.end(), [&](int a, int b) { return t_less(a, b); });
}

int TypeA::root_index(int i, int j) const {
  if (i < 1 || j > n_ || i >= j) throw std::invalid_argument("need 1 <= i < j <= n");
  return index_[i][j];
}

// e_i - e_j <_t e_r - e_s iff s < j, or s = j and i < r.
bool TypeA::t_less(int a, int b) const {
  auto [i, j] = ij_.at(a);
  auto [r, s] = ij_.at(b);
  return s < j || (s == j && i < r);
}

std::vector<int> singular_roots(const RootSystem& sys, const std::vector<int>& d) {
  std::set<int> s;
  for (int b : d)
    for (int a : sys.singular_set(b)) s.insert(a);
  return {s.begin(), s.end()};
}

std::vector<int> regular_roots(const RootSystem& sys, const std::vector<int>& d) {
  std::vector<int> sing = singular_roots(sys, d);
  std::vector<int> out;
  for (int r = 0; r < sys.num_positive(); ++r)
    if (!std::binary_search(sing.begin(), sing.end(), r)) out.push_back(r);
  return out;
}

std::vector<int> d_alpha(const RootSystem& sys, const std::vector<int>& d, int alpha) {
  std::vector<int> sing = singular_roots(sys, d);
  if (std::binary_search(sing.begin(), sing.end(), alpha)) throw std::invalid_argument("root is singular for D");
  std::set<int> out{alpha};
  for (int b : d)
    if (sys.leq(alpha, b)) out.insert(b);
  return {out.begin(), out.end()};
}

MinorSpec minor_spec(const TypeA& a, const std::vector<int>& d, int alpha) {
  MinorSpec m;
  for (int b : d_alpha(a.system(), d, alpha)) {
    m.rows.push_back(a.col_of(b));
    m.cols.push_back(a.row_of(b));
  }
  std::sort(m.rows.begin(), m.rows.end());
  std::sort(m.cols.begin(), m.cols.end());
  return m;
}

Rational delta_minor(const TypeA& a, const std::vector<int>& d, int alpha, const MatrixForm& lambda) {
  MinorSpec m = minor_spec(a, d, alpha);
  std::vector<int> r, c;
  for (int x : m.rows) r.push_back(x - 1);
  for (int x : m.cols) c.push_back(x - 1);
  return determinant(submatrix(lambda, r, c));
}

MatrixForm zero_matrix_form(const TypeA& a) { return MatrixForm::Zero(a.n(), a.n()); }

MatrixForm matrix_f_form(const TypeA& a, const RookPlacement& d, const XiMap& xi) {
  LinearForm f = f_form(a.system(), d, xi);
  MatrixForm m = zero_matrix_form(a);
  for (int r = 0; r < a.system().num_positive(); ++r) {
    auto [i, j] = a.ij(r);
    m(j - 1, i - 1) = f(r);
  }
  return m;
}

bool is_matrix_form(const TypeA& a, const MatrixForm& lambda) {
  if (lambda.rows() != a.n() || lambda.cols() != a.n()) return false;
  for (int i = 0; i < a.n(); ++i)
    for (int j = i; j < a.n(); ++j)
      if (!lambda(i, j).is_zero()) return false;
  return true;
}

bool membership(const TypeA& a, const RookPlacement& d, const XiMap& xi, const MatrixForm& lambda) {
  if (!is_matrix_form(a, lambda)) throw std::invalid_argument("not a strictly lower-triangular form");
  MatrixForm f = matrix_f_form(a, d, xi);
  for (int alpha : regular_roots(a.system(), d.roots()))
    if (delta_minor(a, d.roots(), alpha, lambda) != delta_minor(a, d.roots(), alpha, f)) return false;
  return true;
}

// Scan <=_t for the first deviating minor, adjoin that root, repeat.
Decomposition decompose(const TypeA& a, const MatrixForm& lambda) {
  if (!is_matrix_form(a, lambda)) throw std::invalid_argument("not a strictly lower-triangular form");
  const RootSystem& sys = a.system();
  std::vector<int> d;
  XiMap xi;
  for (int step = 0; step <= sys.num_positive(); ++step) {
    MatrixForm f = matrix_f_form(a, RookPlacement::make(sys, d), xi);
    std::vector<int> reg = regular_roots(sys, d);
    int deviating = -1;
    for (int alpha : a.t_order()) {
      if (!std::binary_search(reg.begin(), reg.end(), alpha)) continue;
      if (delta_minor(a, d, alpha, lambda) != delta_minor(a, d, alpha, f)) {
        deviating = alpha;
        break;
      }
    }
    if (deviating < 0) return {RookPlacement::make(sys, d), xi};
    std::vector<int> next = d;
    next.push_back(deviating);
    std::sort(next.begin(), next.end());
    if (!is_rook_placement(sys, next)) throw InconsistencyError("decomposition left the rook placements");
    XiMap unit = xi;
    unit[deviating] = Rational(1);
    RookPlacement np = RookPlacement::make(sys, next);
    Rational base = delta_minor(a, next, deviating, matrix_f_form(a, np, unit));
    Rational target = delta_minor(a, next, deviating, lambda);
    if (base.is_zero() || target.is_zero()) throw InconsistencyError("degenerate minor during decomposition");
    d = next;
    xi[deviating] = target / base;
  }
  throw InconsistencyError("decomposition did not terminate");
}

int basic_dim(const RootSystem& sys, const std::vector<int>& d) { return static_cast<int>(singular_roots(sys, d).size()); }

RationalMatrix minor_jacobian(const TypeA& a, const std::vector<int>& d, const MatrixForm& lambda) {
  const RootSystem& sys = a.system();
  std::vector<int> reg = regular_roots(sys, d);
  RationalMatrix jac = RationalMatrix::Zero(reg.size(), sys.num_positive());
  for (size_t k = 0; k < reg.size(); ++k) {
    MinorSpec m = minor_spec(a, d, reg[k]);
    const int size = static_cast<int>(m.rows.size());
    for (int p = 0; p < size; ++p)
      for (int q = 0; q < size; ++q) {
        int row = m.rows[p], col = m.cols[q];
        if (row <= col) continue;
        std::vector<int> rr, cc;
        for (int s = 0; s < size; ++s) {
          if (s != p) rr.push_back(m.rows[s] - 1);
          if (s != q) cc.push_back(m.cols[s] - 1);
        }
        Rational cof = determinant(submatrix(lambda, rr, cc));
        if ((p + q) % 2) cof = -cof;
        jac(k, a.root_index(col, row)) += cof;
      }
  }
  return jac;
}

RationalMatrix unipotent_element(const TypeA& a, const std::vector<int>& signs, const RationalVector& x) {
  RationalMatrix m = RationalMatrix::Zero(a.n(), a.n());
  for (int r = 0; r < a.system().num_positive(); ++r) {
    auto [i, j] = a.ij(r);
    m(i - 1, j - 1) = x(r) * Rational(signs[r]);
  }
  return nilpotent_exp(m);
}

MatrixForm matrix_act(const RationalMatrix& g, const MatrixForm& lambda) {
  RationalMatrix full = g * lambda * unipotent_inverse(g);
  for (Eigen::Index i = 0; i < full.rows(); ++i)
    for (Eigen::Index j = i; j < full.cols(); ++j) full(i, j) = Rational(0);
  return full;
}

std::vector<int> matrix_unit_signs(const TypeA& a, const StructureTable& t) {
  const RootSystem& sys = a.system();
  const int p = sys.num_positive();
  // [E_ij, E_kl] = sigma E_{..}: +1 if j = k, -1 if l = i.
  auto sigma = [&](int x, int y) {
    auto [i, j] = a.ij(x);
    auto [k, l] = a.ij(y);
    if (j == k) return 1;
    if (l == i) return -1;
    return 0;
  };
  std::vector<int> s(p, 0);
  for (int r = 0; r < p; ++r) {
    if (sys.height(r) == 1) {
      s[r] = 1;
      continue;
    }
    for (int x = 0; x < p && !s[r]; ++x) {
      auto yi = sys.index_of(root_sub(sys.root(r), sys.root(x)));
      if (!yi) continue;
      int y = *yi;
      if (!s[x] || !s[y]) continue;
      // |N| = 1 in type A, so dividing by N is multiplying by it.
      s[r] = s[x] * s[y] * sigma(x, y) * t.n_const(x, y);
    }
    if (!s[r]) throw InconsistencyError("could not assign matrix-unit sign");
  }
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y) {
      int c = t.sum_id(x, y);
      if (c < 0) continue;
      if (t.n_const(x, y) * s[c] != s[x] * s[y] * sigma(x, y))
        throw InconsistencyError("type A table is not realized by matrix units");
    }
  return s;
}

MatrixForm to_matrix_form(const TypeA& a, const std::vector<int>& signs, const LinearForm& lambda) {
  MatrixForm m = zero_matrix_form(a);
  for (int r = 0; r < a.system().num_positive(); ++r) {
    auto [i, j] = a.ij(r);
    m(j - 1, i - 1) = lambda(r) * Rational(signs[r]);
  }
  return m;
}

LinearForm from_matrix_form(const TypeA& a, const std::vector<int>& signs, const MatrixForm& lambda) {
  LinearForm f = zero_form(a.system());
  for (int r = 0; r < a.system().num_positive(); ++r) {
    auto [i, j] = a.ij(r);
    f(r) = lambda(j - 1, i - 1) * Rational(signs[r]);
  }
  return f;
}

}  // namespace rook_orbits
