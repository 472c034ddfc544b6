#pragma once

#include <utility>
#include <vector>

#include "rook_orbits/coadjoint.hpp"

namespace rook_orbits {

// Strictly lower-triangular n x n matrix; entry (j,i), i<j, is lambda(E_ij).
using MatrixForm = RationalMatrix;

struct MinorSpec {
  std::vector<int> rows;  // 1-based, increasing
  std::vector<int> cols;
};

// The positive roots e_i - e_j of A(n-1) with their matrix coordinates.
class TypeA {
 public:
  explicit TypeA(int n);

  int n() const { return n_; }
  const RootSystem& system() const { return sys_; }
  int root_index(int i, int j) const;
  std::pair<int, int> ij(int root) const { return ij_.at(root); }
  int row_of(int root) const { return ij_.at(root).first; }
  int col_of(int root) const { return ij_.at(root).second; }
  // Positive roots sorted by the total order <=_t, smallest first.
  const std::vector<int>& t_order() const { return t_order_; }
  bool t_less(int a, int b) const;

 private:
  int n_;
  RootSystem sys_;
  std::vector<std::pair<int, int>> ij_;
  std::vector<std::vector<int>> index_;
  std::vector<int> t_order_;
};

std::vector<int> singular_roots(const RootSystem& sys, const std::vector<int>& d);
std::vector<int> regular_roots(const RootSystem& sys, const std::vector<int>& d);
std::vector<int> d_alpha(const RootSystem& sys, const std::vector<int>& d, int alpha);
MinorSpec minor_spec(const TypeA& a, const std::vector<int>& d, int alpha);
Rational delta_minor(const TypeA& a, const std::vector<int>& d, int alpha, const MatrixForm& lambda);

MatrixForm zero_matrix_form(const TypeA& a);
MatrixForm matrix_f_form(const TypeA& a, const RookPlacement& d, const XiMap& xi);
bool is_matrix_form(const TypeA& a, const MatrixForm& lambda);
bool membership(const TypeA& a, const RookPlacement& d, const XiMap& xi, const MatrixForm& lambda);

struct Decomposition {
  RookPlacement placement;
  XiMap xi;
};
Decomposition decompose(const TypeA& a, const MatrixForm& lambda);
int basic_dim(const RootSystem& sys, const std::vector<int>& d);

// Gradients of the minors Delta_alpha, alpha in R(D), in the variables lambda_gamma.
RationalMatrix minor_jacobian(const TypeA& a, const std::vector<int>& d, const MatrixForm& lambda);

// Matrix realization of n and its dual.
RationalMatrix unipotent_element(const TypeA& a, const std::vector<int>& signs, const RationalVector& x);
MatrixForm matrix_act(const RationalMatrix& g, const MatrixForm& lambda);
// s_gamma with e_gamma = s_gamma E_ij for the given table; throws if no such signs exist.
std::vector<int> matrix_unit_signs(const TypeA& a, const StructureTable& t);
MatrixForm to_matrix_form(const TypeA& a, const std::vector<int>& signs, const LinearForm& lambda);
LinearForm from_matrix_form(const TypeA& a, const std::vector<int>& signs, const MatrixForm& lambda);

}  // namespace rook_orbits
