#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rook_orbits/rational.hpp"
#include "rook_orbits/rook_placement.hpp"

namespace rook_orbits {

// p_ij = 2(alpha_i, beta_j)/(alpha_i, alpha_i); rows follow simple_order, columns d_order.
struct PairingMatrix {
  std::vector<int> rows;  // 0-based simple-root indices
  std::vector<int> cols;  // positive-root indices
  RationalMatrix entries;
};

PairingMatrix p_matrix(const RootSystem& sys, const std::vector<int>& simple_order, const std::vector<int>& d_order);
// I and J are 1-based row and column positions.
Rational dtilde_minor(const PairingMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

struct MinorCheck {
  int step = 0;         // k
  int candidate = 0;    // i_k, or the excluded row l for a vanishing condition
  std::vector<int> rows;
  std::vector<int> cols;
  Rational value;
  bool must_vanish = false;
  bool ok() const { return must_vanish ? value.is_zero() : !value.is_zero(); }
};

// All nonvanishing and vanishing conditions of the minor-tuple criterion for a tuple (1-based rows).
std::vector<MinorCheck> prop43_checks(const PairingMatrix& m, const std::vector<int>& tuple);
bool prop43_holds(const PairingMatrix& m, const std::vector<int>& tuple);
std::vector<std::vector<int>> prop43_solutions(const PairingMatrix& m);
// Throws InconsistencyError if more than one tuple qualifies.
std::optional<std::vector<int>> find_prop43_certificate(const RootSystem& sys, const std::vector<int>& d_order,
                                                        const std::vector<int>& simple_order);

bool check_prop42(const RootSystem& sys, const std::vector<int>& d, int beta0, int alpha0);
bool lemma41_applicable(const RootSystem& sys, const std::vector<int>& d, int beta);
// Throws std::invalid_argument if D has no unique maximal root or beta is not submaximal.
bool check_lemma41(const RootSystem& sys, const std::vector<int>& d, int beta);
std::optional<std::vector<int>> lemma41_decomposition(const RootSystem& sys, const std::vector<int>& d, int beta);

enum class JustificationKind { MaximalRoot, Prop42, Prop43, Lemma41, Excluded, None };
std::string kind_name(JustificationKind k);

struct Justification {
  JustificationKind kind = JustificationKind::None;
  int alpha0 = -1;
  std::vector<int> simple_order;
  std::vector<int> d_order;
  std::vector<int> tuple;
  std::vector<int> decomposition;
  std::string reason;
};

struct Certificate {
  RookPlacement placement;
  std::map<int, Justification> per_root;
  // Every tool whose conditions hold for the root.
  std::map<int, std::vector<JustificationKind>> applicable;
  bool complete() const;
  std::vector<int> unjustified() const;
};

// Linear extensions of >= on D: beta_i < beta_j never occurs with i < j.
std::vector<std::vector<int>> compatible_d_orders(const RootSystem& sys, const std::vector<int>& d);
std::optional<Justification> search_prop43(const RootSystem& sys, const std::vector<int>& d);
Certificate certify_distinctness(const RootSystem& sys, const RookPlacement& d);

struct CertifyAllSummary {
  int placements = 0;
  int complete = 0;
  std::map<JustificationKind, int> counts;
  std::vector<Certificate> certificates;
  bool all_complete() const { return placements == complete; }
};
CertifyAllSummary certify_all(const RootSystem& sys, bool progress = false);

}  // namespace rook_orbits
