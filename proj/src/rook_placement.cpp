#include "rook_orbits/rook_placement.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rook_orbits {

RookPlacement RookPlacement::make(const RootSystem& sys, std::vector<int> roots) {
  std::set<int> distinct(roots.begin(), roots.end());
  if (distinct.size() != roots.size()) throw std::invalid_argument("rook placement has repeated roots");
  for (int r : roots)
    if (r < 0 || r >= sys.num_positive()) throw std::invalid_argument("rook placement root out of range");
  if (!is_rook_placement(sys, roots)) throw std::invalid_argument("roots are not a rook placement");
  RookPlacement p;
  p.roots_ = std::move(roots);
  return p;
}

RookPlacement RookPlacement::from_roots(const RootSystem& sys, const std::vector<Root>& roots) {
  std::vector<int> idx;
  for (const Root& r : roots) {
    auto i = sys.index_of(r);
    if (!i) throw std::invalid_argument("not a positive root: " + format_root(r));
    idx.push_back(*i);
  }
  return make(sys, idx);
}

bool RookPlacement::contains(int idx) const { return std::find(roots_.begin(), roots_.end(), idx) != roots_.end(); }

std::vector<int> RookPlacement::sorted() const {
  std::vector<int> s = roots_;
  std::sort(s.begin(), s.end());
  return s;
}

std::string RookPlacement::str(const RootSystem& sys) const {
  std::string s = "{";
  for (size_t i = 0; i < roots_.size(); ++i) {
    if (i) s += "; ";
    s += sys.root_string(roots_[i]);
  }
  return s + "}";
}

PlacementFilter parse_filter(const std::string& text) {
  if (text == "all") return PlacementFilter::All;
  if (text == "nonsingular") return PlacementFilter::Nonsingular;
  if (text == "orthogonal") return PlacementFilter::Orthogonal;
  if (text == "orthogonal-nonsingular") return PlacementFilter::OrthogonalNonsingular;
  throw std::invalid_argument("unknown filter '" + text + "'");
}

std::string filter_name(PlacementFilter f) {
  switch (f) {
    case PlacementFilter::All: return "all";
    case PlacementFilter::Nonsingular: return "nonsingular";
    case PlacementFilter::Orthogonal: return "orthogonal";
    case PlacementFilter::OrthogonalNonsingular: return "orthogonal-nonsingular";
  }
  return "?";
}

bool is_rook_placement(const RootSystem& sys, const std::vector<int>& roots) {
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      if (roots[i] == roots[j] || sys.inner(roots[i], roots[j]) > Rational(0)) return false;
  return true;
}

bool is_nonsingular(const RootSystem& sys, const std::vector<int>& roots) {
  for (int a : roots)
    for (int b : roots)
      if (a != b && sys.index_of(root_sub(sys.root(a), sys.root(b)))) return false;
  return true;
}

bool is_orthogonal(const RootSystem& sys, const std::vector<int>& roots) {
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      if (!sys.inner(roots[i], roots[j]).is_zero()) return false;
  return true;
}

namespace {

bool pair_ok(const RootSystem& sys, int a, int b, PlacementFilter f) {
  Rational ip = sys.inner(a, b);
  if (ip > Rational(0)) return false;
  bool need_orth = f == PlacementFilter::Orthogonal || f == PlacementFilter::OrthogonalNonsingular;
  bool need_ns = f == PlacementFilter::Nonsingular || f == PlacementFilter::OrthogonalNonsingular;
  if (need_orth && !ip.is_zero()) return false;
  if (need_ns && (sys.index_of(root_sub(sys.root(a), sys.root(b))) || sys.index_of(root_sub(sys.root(b), sys.root(a)))))
    return false;
  return true;
}

void backtrack(const RootSystem& sys, PlacementFilter f, int start, std::vector<int>& cur,
               std::vector<RookPlacement>& out) {
  out.push_back(RookPlacement::make(sys, cur));
  for (int k = start; k < sys.num_positive(); ++k) {
    bool ok = std::all_of(cur.begin(), cur.end(), [&](int c) { return pair_ok(sys, c, k, f); });
    if (!ok) continue;
    cur.push_back(k);
    backtrack(sys, f, k + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

bool passes_filter(const RootSystem& sys, const std::vector<int>& roots, PlacementFilter f) {
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      if (roots[i] == roots[j] || !pair_ok(sys, roots[i], roots[j], f)) return false;
  return true;
}

std::vector<RookPlacement> enumerate_rook_placements(const RootSystem& sys, PlacementFilter f) {
  std::vector<RookPlacement> out;
  std::vector<int> cur;
  backtrack(sys, f, 0, cur, out);
  return out;
}

// Every filtered family is closed under subsets, so maximal means no root can be added.
std::vector<RookPlacement> maximal_rook_placements(const RootSystem& sys, PlacementFilter f) {
  std::vector<RookPlacement> out;
  for (const RookPlacement& p : enumerate_rook_placements(sys, f)) {
    bool extendable = false;
    for (int k = 0; k < sys.num_positive() && !extendable; ++k) {
      if (p.contains(k)) continue;
      extendable = std::all_of(p.roots().begin(), p.roots().end(), [&](int c) { return pair_ok(sys, c, k, f); });
    }
    if (!extendable) out.push_back(p);
  }
  return out;
}

std::vector<int> maximal_members(const RootSystem& sys, const std::vector<int>& roots) {
  std::vector<int> out;
  for (int b : roots) {
    bool dominated = std::any_of(roots.begin(), roots.end(), [&](int e) { return sys.less(b, e); });
    if (!dominated) out.push_back(b);
  }
  return out;
}

}  // namespace rook_orbits
