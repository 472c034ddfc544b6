#include "rook_orbits/f4_reports.hpp"

#include <algorithm>
#include <set>

namespace rook_orbits {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Flag: return "FLAG";
    case Status::Fail: return "FAIL";
    case Status::Skip: return "SKIP";
  }
  return "?";
}

Status worst(Status a, Status b) {
  auto rank = [](Status s) {
    switch (s) {
      case Status::Pass: return 0;
      case Status::Skip: return 1;
      case Status::Flag: return 2;
      case Status::Fail: return 3;
    }
    return 3;
  };
  return rank(a) >= rank(b) ? a : b;
}

namespace {

std::vector<int> complete_order(const std::vector<int>& order, int rank) {
  std::vector<int> out;
  std::set<int> seen;
  std::vector<int> missing;
  for (int i = 1; i <= rank; ++i)
    if (std::find(order.begin(), order.end(), i) == order.end()) missing.push_back(i);
  size_t next = 0;
  for (int x : order) {
    if (seen.insert(x).second) {
      out.push_back(x);
    } else if (next < missing.size()) {
      out.push_back(missing[next++]);
    }
  }
  return out;
}

std::vector<int> zero_based(const std::vector<int>& v) {
  std::vector<int> out;
  for (int x : v) out.push_back(x - 1);
  return out;
}

}  // namespace

Status TableReport::status() const {
  if (!uniqueness) return Status::Fail;
  bool want16 = std::any_of(rows.begin(), rows.end(), [](const TableRowReport& r) { return r.row == 16; });
  if (want16 && !row16_flagged) return Status::Fail;
  const int need = static_cast<int>(rows.size()) == 24 ? 23 : static_cast<int>(rows.size()) - (want16 ? 1 : 0);
  if (matches < need) return Status::Fail;
  Status s = Status::Pass;
  for (const auto& r : rows) s = worst(s, r.status);
  return s;
}

TableReport verify_prop44_table(const RootSystem& sys, const ReferenceData& data, int row) {
  TableReport rep;
  for (const TableRowData& t : data.table) {
    if (row != 0 && t.row != row) continue;
    TableRowReport r;
    r.row = t.row;
    r.roots = t.roots;
    r.printed_order = t.simple_order;
    r.printed_tuple = t.i_tuple;
    std::vector<int> sorted = t.simple_order;
    std::sort(sorted.begin(), sorted.end());
    r.order_is_permutation = sorted == std::vector<int>{1, 2, 3, 4};
    r.order_used = r.order_is_permutation ? t.simple_order : complete_order(t.simple_order, sys.rank());
    r.is_rook_placement = is_rook_placement(sys, t.roots);

    PairingMatrix m = p_matrix(sys, zero_based(r.order_used), t.roots);
    r.solutions = prop43_solutions(m);
    r.unique = r.solutions.size() <= 1;
    r.match = r.solutions.size() == 1 && r.solutions.front() == t.i_tuple;
    r.checks = prop43_checks(m, t.i_tuple);
    for (const PrintedMinor& pm : data.printed_minors)
      if (pm.row == t.row) r.printed_minors.push_back({pm.rows, pm.cols, pm.value, dtilde_minor(m, pm.rows, pm.cols)});

    std::vector<std::string> notes;
    if (!r.order_is_permutation) notes.push_back("printed simple order repeats a root; checked its completion");
    if (!r.is_rook_placement) notes.push_back("printed roots are not a rook placement");
    if (!r.match) notes.push_back(r.solutions.empty() ? "no tuple satisfies the conditions" : "recomputed tuple differs");
    for (const auto& pm : r.printed_minors)
      if (!pm.abs_agree()) notes.push_back("printed minor value differs in absolute value");
    for (size_t i = 0; i < notes.size(); ++i) r.note += (i ? "; " : "") + notes[i];
    r.status = (r.match && r.order_is_permutation) ? Status::Pass : Status::Flag;

    if (r.match) ++rep.matches;
    if (!r.unique) rep.uniqueness = false;
    if (t.row == 16 && !r.order_is_permutation) rep.row16_flagged = true;
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

Status MaximalReport::status() const {
  if (!sets_equal() || !not_rook.empty() || !beta1_maximal) return Status::Fail;
  return second_root_matches() ? Status::Pass : Status::Fail;
}

MaximalReport verify_maximal_list(const RootSystem& sys, const ReferenceData& data) {
  MaximalReport rep;
  rep.maximal_all = static_cast<int>(maximal_rook_placements(sys, PlacementFilter::All).size());
  auto orth = maximal_rook_placements(sys, PlacementFilter::Orthogonal);
  rep.maximal_orthogonal = static_cast<int>(orth.size());
  rep.printed_count = static_cast<int>(data.maximal.size());

  std::set<std::vector<int>> computed, printed;
  for (const auto& d : orth) computed.insert(d.sorted());
  for (const auto& p : data.maximal) {
    std::vector<int> s = p.roots;
    std::sort(s.begin(), s.end());
    printed.insert(s);
    if (!is_rook_placement(sys, p.roots)) rep.not_rook.push_back(p.name);
  }
  for (const auto& d : orth)
    if (!printed.count(d.sorted())) rep.missing.push_back(d.str(sys));
  for (const auto& p : data.maximal) {
    std::vector<int> s = p.roots;
    std::sort(s.begin(), s.end());
    if (!computed.count(s)) rep.extra.push_back(p.name);
  }

  for (size_t i = 0; i < data.maximal.size(); ++i) {
    const auto& roots = data.maximal[i].roots;
    std::vector<int> mx = maximal_members(sys, roots);
    auto is_max = [&](int r) { return std::find(mx.begin(), mx.end(), r) != mx.end(); };
    if (!is_max(roots.front())) rep.beta1_maximal = false;
    if (roots.size() > 1 && is_max(roots[1])) rep.second_root_maximal.push_back(static_cast<int>(i) + 1);
    if (mx.size() >= 2) rep.two_maximal_members.push_back(static_cast<int>(i) + 1);
  }
  rep.printed_second_root = data.second_root_maximal;
  return rep;
}

Prop42Report verify_prop42_list(const RootSystem& sys, const ReferenceData& data) {
  Prop42Report rep;
  for (const Prop42Entry& e : data.prop42) {
    Prop42Row r;
    r.entry = e;
    const auto& d = data.placement(e.placement).roots;
    const int beta0 = d.at(e.beta0 - 1);
    const int a0 = e.alpha0 - 1;
    r.literal = check_prop42(sys, d, beta0, a0);
    const Root a = sys.simple_root(a0);
    const bool pairs = !sys.inner_product(a, sys.root(beta0)).is_zero();
    r.weak = pairs;
    for (int b : d) {
      if (b == beta0) continue;
      const bool orth = sys.inner_product(a, sys.root(b)).is_zero();
      if (!sys.less(b, beta0) && !orth) r.witnesses.push_back(b);
      if (sys.less(beta0, b) && !orth) r.weak = false;
    }
    if (r.literal) ++rep.passed;
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

Status ExtraReport::status() const {
  for (const auto& r : rows)
    if (!r.certificate.complete() || !r.tools_match) return Status::Fail;
  return Status::Pass;
}

ExtraReport verify_extra_placements(const RootSystem& sys, const ReferenceData& data) {
  ExtraReport rep;
  for (const NamedPlacement& p : data.extra) {
    ExtraRow r;
    r.name = p.name;
    r.certificate = certify_distinctness(sys, RookPlacement::make(sys, p.roots));
    for (int k : p.lemma41_roots) r.named_roots.push_back(p.roots.at(k - 1));
    r.tools_match = true;
    for (int b : p.roots) {
      JustificationKind k = r.certificate.per_root.at(b).kind;
      bool named = std::find(r.named_roots.begin(), r.named_roots.end(), b) != r.named_roots.end();
      if (named && k != JustificationKind::Lemma41) r.tools_match = false;
    }
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

}  // namespace rook_orbits
