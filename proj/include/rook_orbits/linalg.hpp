#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rook_orbits {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Fraction-free Gaussian elimination with row pivoting.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  DenseMatrix<Scalar> m = a;
  Scalar prev(1);
  bool negate = false;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (m(k, k) == Scalar(0)) {
      Eigen::Index p = k + 1;
      while (p < n && m(p, k) == Scalar(0)) ++p;
      if (p == n) return Scalar(0);
      m.row(k).swap(m.row(p));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = Scalar(0);
    }
    prev = m(k, k);
  }
  return negate ? Scalar(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  DenseMatrix<Scalar> m = a;
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
    Eigen::Index p = rank;
    while (p < m.rows() && m(p, col) == Scalar(0)) ++p;
    if (p == m.rows()) continue;
    m.row(rank).swap(m.row(p));
    for (Eigen::Index i = rank + 1; i < m.rows(); ++i) {
      if (m(i, col) == Scalar(0)) continue;
      Scalar f = m(i, col) / m(rank, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

template <typename Derived>
DenseMatrix<typename Derived::Scalar> submatrix(const Eigen::MatrixBase<Derived>& a, const std::vector<int>& rows,
                                                const std::vector<int>& cols) {
  DenseMatrix<typename Derived::Scalar> out(rows.size(), cols.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) out(i, j) = a(rows[i], cols[j]);
  return out;
}

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != Scalar(0)) return false;
  return true;
}

template <typename Derived>
bool is_strictly_upper(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j <= i && j < a.cols(); ++j)
      if (a(i, j) != Scalar(0)) return false;
  return true;
}

// Least k with a^k = 0; throws if a is not nilpotent.
template <typename Derived>
int nilpotency_index(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (is_zero_matrix(a)) return 1;
  DenseMatrix<Scalar> power = a;
  for (Eigen::Index k = 2; k <= a.rows() + 1; ++k) {
    power = (power * a).eval();
    if (is_zero_matrix(power)) return static_cast<int>(k);
  }
  throw std::invalid_argument("matrix is not nilpotent");
}

// exp(a) for nilpotent a, exact series.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> nilpotent_exp(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = a.rows();
  DenseMatrix<Scalar> result = DenseMatrix<Scalar>::Identity(n, n);
  DenseMatrix<Scalar> term = DenseMatrix<Scalar>::Identity(n, n);
  for (Eigen::Index k = 1; k <= n + 1; ++k) {
    term = (term * a).eval() / Scalar(static_cast<long>(k));
    if (is_zero_matrix(term)) return result;
    result += term;
  }
  throw std::invalid_argument("matrix is not nilpotent");
}

// Inverse of a unipotent matrix u = 1 + v: sum of (-v)^k.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> unipotent_inverse(const Eigen::MatrixBase<Derived>& u) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = u.rows();
  DenseMatrix<Scalar> v = DenseMatrix<Scalar>::Identity(n, n) - u;
  DenseMatrix<Scalar> result = DenseMatrix<Scalar>::Identity(n, n);
  DenseMatrix<Scalar> term = DenseMatrix<Scalar>::Identity(n, n);
  for (Eigen::Index k = 1; k <= n + 1; ++k) {
    term = (term * v).eval();
    if (is_zero_matrix(term)) return result;
    result += term;
  }
  throw std::invalid_argument("matrix is not unipotent");
}

}  // namespace rook_orbits
