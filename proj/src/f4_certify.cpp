#include "rook_orbits/f4_certify.hpp"

#include <algorithm>
#include <iostream>
#include <numeric>
#include <set>
#include <stdexcept>

#include "rook_orbits/andre.hpp"
#include "rook_orbits/chevalley.hpp"
#include "rook_orbits/linalg.hpp"

namespace rook_orbits {

PairingMatrix p_matrix(const RootSystem& sys, const std::vector<int>& simple_order, const std::vector<int>& d_order) {
  std::vector<int> sorted = simple_order;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) || static_cast<int>(sorted.size()) != sys.rank())
      throw std::invalid_argument("simple order is not a permutation of the simple roots");
  PairingMatrix m{simple_order, d_order, RationalMatrix(simple_order.size(), d_order.size())};
  for (size_t i = 0; i < simple_order.size(); ++i)
    for (size_t j = 0; j < d_order.size(); ++j) m.entries(i, j) = sys.cartan_pairing(simple_order[i], sys.root(d_order[j]));
  return m;
}

Rational dtilde_minor(const PairingMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor needs |I| = |J|");
  std::vector<int> r, c;
  for (int x : rows) r.push_back(x - 1);
  for (int x : cols) c.push_back(x - 1);
  std::sort(r.begin(), r.end());
  std::sort(c.begin(), c.end());
  return determinant(submatrix(m.entries, r, c));
}

// I_k = rows i_l (l <= k) with i_l >= i_k, J_k their steps; for each unused l > i_k the
// minor on {l} and the earlier rows below l, against column k and their columns, vanishes.
std::vector<MinorCheck> prop43_checks(const PairingMatrix& m, const std::vector<int>& tuple) {
  const int n = static_cast<int>(m.entries.rows());
  std::vector<MinorCheck> out;
  for (size_t k = 1; k <= tuple.size(); ++k) {
    const int ik = tuple[k - 1];
    MinorCheck main;
    main.step = static_cast<int>(k);
    main.candidate = ik;
    for (size_t l = 1; l <= k; ++l)
      if (tuple[l - 1] >= ik) {
        main.rows.push_back(tuple[l - 1]);
        main.cols.push_back(static_cast<int>(l));
      }
    main.value = dtilde_minor(m, main.rows, main.cols);
    out.push_back(main);
    std::set<int> used(tuple.begin(), tuple.begin() + (k - 1));
    for (int l = ik + 1; l <= n; ++l) {
      if (used.count(l)) continue;
      MinorCheck side;
      side.step = static_cast<int>(k);
      side.candidate = l;
      side.must_vanish = true;
      side.rows.push_back(l);
      side.cols.push_back(static_cast<int>(k));
      for (size_t s = 1; s < k; ++s)
        if (tuple[s - 1] > l) {
          side.rows.push_back(tuple[s - 1]);
          side.cols.push_back(static_cast<int>(s));
        }
      side.value = dtilde_minor(m, side.rows, side.cols);
      out.push_back(side);
    }
  }
  return out;
}

bool prop43_holds(const PairingMatrix& m, const std::vector<int>& tuple) {
  for (const MinorCheck& c : prop43_checks(m, tuple))
    if (!c.ok()) return false;
  return true;
}

std::vector<std::vector<int>> prop43_solutions(const PairingMatrix& m) {
  const int n = static_cast<int>(m.entries.rows());
  const int cols = static_cast<int>(m.entries.cols());
  std::vector<std::vector<int>> out;
  if (cols > n) return out;
  std::vector<int> rows(n);
  std::iota(rows.begin(), rows.end(), 1);
  std::set<std::vector<int>> seen;
  do {
    std::vector<int> t(rows.begin(), rows.begin() + cols);
    if (seen.insert(t).second && prop43_holds(m, t)) out.push_back(t);
  } while (std::next_permutation(rows.begin(), rows.end()));
  return out;
}

std::optional<std::vector<int>> find_prop43_certificate(const RootSystem& sys, const std::vector<int>& d_order,
                                                        const std::vector<int>& simple_order) {
  auto sols = prop43_solutions(p_matrix(sys, simple_order, d_order));
  if (sols.empty()) return std::nullopt;
  if (sols.size() > 1) throw InconsistencyError("more than one minor tuple satisfies the criterion");
  return sols.front();
}

bool check_prop42(const RootSystem& sys, const std::vector<int>& d, int beta0, int alpha0) {
  Root a0 = sys.simple_root(alpha0);
  if (sys.inner_product(a0, sys.root(beta0)).is_zero()) return false;
  for (int b : d) {
    if (b == beta0 || sys.less(b, beta0)) continue;
    if (!sys.inner_product(a0, sys.root(b)).is_zero()) return false;
  }
  return true;
}

bool lemma41_applicable(const RootSystem& sys, const std::vector<int>& d, int beta) {
  std::vector<int> mx = maximal_members(sys, d);
  if (mx.size() != 1 || mx.front() == beta) return false;
  if (std::find(d.begin(), d.end(), beta) == d.end()) return false;
  for (int g : d)
    if (g != mx.front() && sys.less(beta, g)) return false;
  return true;
}

std::optional<std::vector<int>> lemma41_decomposition(const RootSystem& sys, const std::vector<int>& d, int beta) {
  if (!lemma41_applicable(sys, d, beta)) return std::nullopt;
  const int beta0 = maximal_members(sys, d).front();
  auto decs = sys.sum_decompositions(root_sub(sys.root(beta0), sys.root(beta)));
  if (decs.size() != 1) return std::nullopt;
  const std::vector<int>& g = decs.front();
  const size_t k = g.size();
  for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
    Root s = sys.root(beta);
    for (size_t j = 0; j < k; ++j)
      if (mask & (size_t{1} << j)) s = root_add(s, sys.root(g[j]));
    if (!sys.is_positive_root(s)) return std::nullopt;
  }
  return g;
}

bool check_lemma41(const RootSystem& sys, const std::vector<int>& d, int beta) {
  if (!lemma41_applicable(sys, d, beta))
    throw std::invalid_argument("lemma needs a unique maximal root and a submaximal beta");
  return lemma41_decomposition(sys, d, beta).has_value();
}

std::string kind_name(JustificationKind k) {
  switch (k) {
    case JustificationKind::MaximalRoot: return "MaximalRoot";
    case JustificationKind::Prop42: return "Prop42";
    case JustificationKind::Prop43: return "Prop43";
    case JustificationKind::Lemma41: return "Lemma41";
    case JustificationKind::Excluded: return "Excluded";
    case JustificationKind::None: return "None";
  }
  return "?";
}

bool Certificate::complete() const { return unjustified().empty(); }

std::vector<int> Certificate::unjustified() const {
  std::vector<int> out;
  for (int r : placement.roots()) {
    auto it = per_root.find(r);
    if (it == per_root.end() || it->second.kind == JustificationKind::None ||
        it->second.kind == JustificationKind::Excluded)
      out.push_back(r);
  }
  return out;
}

std::vector<std::vector<int>> compatible_d_orders(const RootSystem& sys, const std::vector<int>& d) {
  std::vector<size_t> idx(d.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    std::vector<int> perm;
    for (size_t i : idx) perm.push_back(d[i]);
    bool ok = true;
    for (size_t i = 0; i < perm.size() && ok; ++i)
      for (size_t j = i + 1; j < perm.size() && ok; ++j)
        if (sys.less(perm[i], perm[j])) ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

std::optional<Justification> search_prop43(const RootSystem& sys, const std::vector<int>& d) {
  std::vector<int> simple(sys.rank());
  std::iota(simple.begin(), simple.end(), 0);
  for (const auto& order : compatible_d_orders(sys, d)) {
    std::vector<int> so = simple;
    do {
      if (auto t = find_prop43_certificate(sys, order, so)) {
        Justification j;
        j.kind = JustificationKind::Prop43;
        j.simple_order = so;
        j.d_order = order;
        j.tuple = *t;
        return j;
      }
    } while (std::next_permutation(so.begin(), so.end()));
  }
  return std::nullopt;
}

// Per root: MaximalRoot, then Prop42, then Lemma41, then Prop43.
Certificate certify_distinctness(const RootSystem& sys, const RookPlacement& d) {
  if (!is_orthogonal(sys, d.roots())) throw std::invalid_argument("placement is not orthogonal");
  Certificate cert;
  cert.placement = d;
  std::optional<std::optional<Justification>> p43;
  auto prop43 = [&]() -> const std::optional<Justification>& {
    if (!p43) p43 = search_prop43(sys, d.roots());
    return *p43;
  };
  std::vector<int> mx = maximal_members(sys, d.roots());
  for (int beta : d.roots()) {
    std::vector<JustificationKind>& app = cert.applicable[beta];
    Justification chosen;
    for (int other : d.roots()) {
      if (other != beta && sys.index_of(root_sub(sys.root(other), sys.root(beta)))) {
        chosen.kind = JustificationKind::Excluded;
        chosen.reason = sys.root_string(beta) + " is singular for " + sys.root_string(other);
        break;
      }
    }
    if (chosen.kind == JustificationKind::Excluded) {
      cert.per_root[beta] = chosen;
      continue;
    }
    if (std::find(mx.begin(), mx.end(), beta) != mx.end()) {
      app.push_back(JustificationKind::MaximalRoot);
      chosen.kind = JustificationKind::MaximalRoot;
    }
    for (int a = 0; a < sys.rank(); ++a)
      if (check_prop42(sys, d.roots(), beta, a)) {
        app.push_back(JustificationKind::Prop42);
        if (chosen.kind == JustificationKind::None) {
          chosen.kind = JustificationKind::Prop42;
          chosen.alpha0 = a;
        }
        break;
      }
    if (auto dec = lemma41_decomposition(sys, d.roots(), beta)) {
      app.push_back(JustificationKind::Lemma41);
      if (chosen.kind == JustificationKind::None) {
        chosen.kind = JustificationKind::Lemma41;
        chosen.decomposition = *dec;
      }
    }
    if (is_nonsingular(sys, d.roots()) && prop43()) {
      app.push_back(JustificationKind::Prop43);
      if (chosen.kind == JustificationKind::None) chosen = *prop43();
    }
    cert.per_root[beta] = chosen;
  }
  return cert;
}

CertifyAllSummary certify_all(const RootSystem& sys, bool progress) {
  CertifyAllSummary s;
  auto placements = enumerate_rook_placements(sys, PlacementFilter::OrthogonalNonsingular);
  for (size_t i = 0; i < placements.size(); ++i) {
    Certificate c = certify_distinctness(sys, placements[i]);
    ++s.placements;
    if (c.complete()) ++s.complete;
    for (const auto& [r, j] : c.per_root) ++s.counts[j.kind];
    s.certificates.push_back(std::move(c));
    if (progress && (i + 1) % 20 == 0) std::cerr << "certified " << (i + 1) << "/" << placements.size() << "\n";
  }
  return s;
}

}  // namespace rook_orbits
