#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rook_orbits/rational.hpp"

namespace rook_orbits {

using Root = std::vector<int>;

enum class SystemFamily { A, G2, F4 };

struct SystemKind {
  SystemFamily family = SystemFamily::G2;
  int n = 0;  // rank for type A

  static SystemKind a(int n) { return {SystemFamily::A, n}; }
  static SystemKind g2() { return {SystemFamily::G2, 2}; }
  static SystemKind f4() { return {SystemFamily::F4, 4}; }
  static SystemKind parse(const std::string& text);
  std::string name() const;
  friend bool operator==(const SystemKind&, const SystemKind&) = default;
};

class RootSystem {
 public:
  explicit RootSystem(SystemKind kind);

  SystemKind kind() const { return kind_; }
  int rank() const { return rank_; }
  const RationalMatrix& gram() const { return gram_; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  int num_positive() const { return static_cast<int>(positive_.size()); }
  Root simple_root(int i) const;

  // Canonical index of a positive root, if it is one.
  std::optional<int> index_of(const Root& v) const;
  const Root& root(int idx) const { return positive_.at(idx); }
  int height(int idx) const;

  Rational inner_product(const Root& a, const Root& b) const;
  Rational inner(int a, int b) const { return inner_[a][b]; }
  // 2(a,b)/(a,a) for a simple root a.
  Rational cartan_pairing(int simple, const Root& b) const;

  bool is_positive_root(const Root& v) const { return index_of(v).has_value(); }
  bool is_root(const Root& v) const;

  bool leq(int a, int b) const { return leq_[a][b]; }
  bool less(int a, int b) const { return a != b && leq_[a][b]; }
  bool leq(const Root& a, const Root& b) const;

  std::vector<int> singular_set(int beta) const;
  std::vector<std::vector<int>> sum_decompositions(const Root& gamma) const;

  std::string root_string(int idx) const;
  std::optional<int> parse_root(const std::string& text) const;

 private:
  void generate_positive_roots();

  SystemKind kind_;
  int rank_ = 0;
  RationalMatrix gram_;
  std::vector<Root> positive_;
  std::map<Root, int> index_;
  std::vector<std::vector<Rational>> inner_;
  std::vector<std::vector<bool>> leq_;
};

Root root_add(const Root& a, const Root& b);
Root root_sub(const Root& a, const Root& b);
Root root_neg(const Root& a);
bool is_nonnegative(const Root& a);
bool is_zero_root(const Root& a);
std::string format_root(const Root& r);
Root parse_root_coeffs(const std::string& text);

}  // namespace rook_orbits
