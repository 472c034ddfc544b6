#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rook_orbits/rational.hpp"
#include "rook_orbits/root_system.hpp"

namespace rook_orbits {

struct InconsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BasisElement {
  enum class Kind { Positive, Cartan, Negative };
  Kind kind = Kind::Positive;
  int index = 0;  // positive-root index, or simple-root index for Cartan

  static BasisElement e(int root) { return {Kind::Positive, root}; }
  static BasisElement f(int root) { return {Kind::Negative, root}; }
  static BasisElement h(int simple) { return {Kind::Cartan, simple}; }
  friend auto operator<=>(const BasisElement&, const BasisElement&) = default;
};

class AlgebraElement {
 public:
  AlgebraElement() = default;
  static AlgebraElement basis(BasisElement b, const Rational& c = Rational(1));
  // sum of x_gamma e_gamma over the positive roots (canonical index order)
  static AlgebraElement from_nilradical(const RationalVector& x);

  void add(BasisElement b, const Rational& c);
  Rational coeff(BasisElement b) const;
  const std::map<BasisElement, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool in_nilradical() const;

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
  friend AlgebraElement operator*(const Rational& s, AlgebraElement a);

 private:
  std::map<BasisElement, Rational> terms_;
};

// Brackets [e_i, e_j] = c_ij e_{i+j} of the positive nilradical, indexed canonically.
class NilpotentAlgebra {
 public:
  explicit NilpotentAlgebra(const RootSystem& sys);

  int dim() const { return dim_; }
  // Sets [e_i,e_j] = c e_{i+j} and [e_j,e_i] = -c e_{i+j}; i+j must be a positive root.
  void set_bracket(int i, int j, const Rational& c);
  int target(int i, int j) const { return target_[i][j]; }
  const Rational& constant(int i, int j) const { return const_[i][j]; }
  // Matrix of ad x on n; column b holds [x, e_b].
  RationalMatrix ad(const RationalVector& x) const;
  RationalVector bracket(const RationalVector& x, const RationalVector& y) const;
  // Violations of the Jacobi identity on basis triples (empty when consistent).
  std::vector<std::string> jacobi_violations() const;

  friend bool operator==(const NilpotentAlgebra&, const NilpotentAlgebra&) = default;

 private:
  int dim_ = 0;
  std::vector<Root> roots_;
  std::vector<std::vector<int>> target_;
  std::vector<std::vector<Rational>> const_;
};

class StructureTable {
 public:
  explicit StructureTable(const RootSystem& sys);
  // Rescaled basis e'_g = s_g e_g, e'_{-g} = s_g e_{-g}; signs indexed by positive root.
  StructureTable(const StructureTable& base, const std::vector<int>& signs);

  const RootSystem& system() const { return sys_; }
  int dim() const { return 2 * num_pos_ + rank_; }
  int num_positive() const { return num_pos_; }

  // Signed root ids: r in [0,P) is a positive root, P + r its negative.
  int signed_id(int pos_root, bool negative) const { return negative ? num_pos_ + pos_root : pos_root; }
  Root signed_root(int id) const;
  int negate(int id) const { return id < num_pos_ ? id + num_pos_ : id - num_pos_; }
  bool is_positive_id(int id) const { return id < num_pos_; }
  int n_const(int a, int b) const { return n_[a][b]; }
  int sum_id(int a, int b) const { return sum_[a][b]; }
  int root_string_p(int a, int b) const;
  int cartan(int simple, int id) const { return cartan_[simple][id]; }
  std::vector<int> coroot(int pos_root) const;

  // Basis order: positive roots by decreasing canonical order, Cartan block, negative roots increasing.
  int position(BasisElement b) const;
  BasisElement basis_at(int pos) const;
  std::string basis_name(int pos) const;

  // Sparse integer bracket of two basis positions.
  std::vector<std::pair<int, long>> bracket_basis(int p, int q) const;
  NilpotentAlgebra nilradical() const;

  std::vector<std::string> antisymmetry_violations() const;
  std::vector<std::string> magnitude_violations() const;
  std::vector<std::string> jacobi_violations(long max_triples = -1) const;

 private:
  void build_constants();
  void build_sums();
  void verify_or_throw() const;

  RootSystem sys_;
  int num_pos_ = 0;
  int rank_ = 0;
  std::vector<Root> signed_roots_;
  std::map<Root, int> signed_index_;
  std::vector<std::vector<int>> sum_;
  std::vector<std::vector<int>> n_;
  std::vector<std::vector<int>> cartan_;
};

AlgebraElement bracket(const StructureTable& t, const AlgebraElement& x, const AlgebraElement& y);
RationalMatrix ad_matrix(const StructureTable& t, const AlgebraElement& x);
int nilpotency_degree(const StructureTable& t, const AlgebraElement& x);

}  // namespace rook_orbits
