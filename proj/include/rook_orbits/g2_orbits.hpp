#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rook_orbits/coadjoint.hpp"
#include "rook_orbits/polynomial.hpp"

namespace rook_orbits {

// c1 = N(a,b), c2 = N(a,a+b), c3 = N(a,2a+b), c4 = N(3a+b,b), c5 = N(a+b,2a+b).
struct G2Constants {
  Rational c1, c2, c3, c4, c5;

  static G2Constants from_table(const StructureTable& t);
  static G2Constants random(std::uint64_t seed);
  bool admissible() const;
  std::vector<Rational> values() const { return {c1, c2, c3, c4, c5}; }
};

struct G2Roots {
  int a, b, ab, a2b, a3b, a3b2;
  explicit G2Roots(const RootSystem& g2);
};

class G2Context {
 public:
  explicit G2Context(const StructureTable& t);
  explicit G2Context(const G2Constants& c);

  const RootSystem& system() const { return sys_; }
  const G2Constants& constants() const { return c_; }
  const NilpotentAlgebra& algebra() const { return alg_; }
  const G2Roots& roots() const { return r_; }
  std::vector<std::string> variable_names() const;

 private:
  RootSystem sys_;
  G2Constants c_;
  NilpotentAlgebra alg_;
  G2Roots r_;
};

NilpotentAlgebra g2_nilradical(const RootSystem& g2, const G2Constants& c);

constexpr int kG2Cases = 12;
RookPlacement g2_case_placement(const G2Context& ctx, int index);
std::optional<int> g2_case_of(const G2Context& ctx, const RookPlacement& d);
PolySystem g2_equations(const G2Context& ctx, int index, const XiMap& xi);
// xi read off from the pinned coordinates of lambda; nothing if a pinning denominator vanishes.
std::optional<XiMap> g2_solve_xi(const G2Context& ctx, int index, const LinearForm& lambda);
// lambda lies in the case's variety for some admissible (nonzero) xi.
bool g2_case_holds(const G2Context& ctx, int index, const LinearForm& lambda);

struct G2Classification {
  int index = 1;
  XiMap xi;
  friend bool operator==(const G2Classification&, const G2Classification&) = default;
};
G2Classification classify(const G2Context& ctx, const LinearForm& lambda);

// Sums of independent single-root orbit samples.
std::vector<LinearForm> basic_subvariety_samples(const G2Context& ctx, const RookPlacement& d, const XiMap& xi,
                                                 int count, std::uint64_t seed);

struct EquationResidual {
  std::string equation;
  int nonzero = 0;
  Rational max_abs;
};

struct CaseReport {
  int index = 0;
  std::string placement;
  XiMap xi;
  int samples = 0;
  std::vector<EquationResidual> residuals;
  int classify_mismatches = 0;
  std::optional<std::string> counterexample;
  bool pass() const;
};
CaseReport verify_case(const G2Context& ctx, int index, const XiMap& xi, int samples, std::uint64_t seed);

struct DimensionRow {
  int index = 0;
  std::string placement;
  int singular_count = 0;
  int jacobian_rank = 0;
  int variety_dim = 0;
  int kirillov = 0;
  bool flagged = false;
};
std::vector<DimensionRow> g2_dimension_report(const G2Context& ctx);

}  // namespace rook_orbits
