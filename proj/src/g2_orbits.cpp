#include "rook_orbits/g2_orbits.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "rook_orbits/andre.hpp"
#include "rook_orbits/linalg.hpp"
#include "rook_orbits/sampling.hpp"

namespace rook_orbits {

namespace {

const RootSystem& g2_system() {
  static const RootSystem sys(SystemKind::g2());
  return sys;
}

std::string xi_string(const RootSystem& sys, const XiMap& xi) {
  std::string s = "{";
  bool first = true;
  for (const auto& [r, v] : xi) {
    if (!first) s += ", ";
    first = false;
    s += sys.root_string(r) + ": " + v.str();
  }
  return s + "}";
}

std::string vector_string(const RationalVector& v) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v(i).str();
  return s + "]";
}

}  // namespace

G2Roots::G2Roots(const RootSystem& g2) {
  if (g2.kind() != SystemKind::g2()) throw std::invalid_argument("G2 root system expected");
  a = *g2.index_of({1, 0});
  b = *g2.index_of({0, 1});
  ab = *g2.index_of({1, 1});
  a2b = *g2.index_of({2, 1});
  a3b = *g2.index_of({3, 1});
  a3b2 = *g2.index_of({3, 2});
}

G2Constants G2Constants::from_table(const StructureTable& t) {
  G2Roots r(t.system());
  return {Rational(t.n_const(r.a, r.b)), Rational(t.n_const(r.a, r.ab)), Rational(t.n_const(r.a, r.a2b)),
          Rational(t.n_const(r.a3b, r.b)), Rational(t.n_const(r.ab, r.a2b))};
}

G2Constants G2Constants::random(std::uint64_t seed) {
  RationalSampler s(seed);
  G2Constants c{s.nonzero(), s.nonzero(), s.nonzero(), s.nonzero(), Rational(0)};
  c.c5 = c.c3 * c.c4 / c.c1;
  return c;
}

bool G2Constants::admissible() const {
  for (const Rational& v : values())
    if (v.is_zero()) return false;
  return c1 * c5 == c3 * c4;
}

NilpotentAlgebra g2_nilradical(const RootSystem& g2, const G2Constants& c) {
  if (!c.admissible()) throw std::invalid_argument("structure constants violate c1*c5 = c3*c4");
  G2Roots r(g2);
  NilpotentAlgebra alg(g2);
  alg.set_bracket(r.a, r.b, c.c1);
  alg.set_bracket(r.a, r.ab, c.c2);
  alg.set_bracket(r.a, r.a2b, c.c3);
  alg.set_bracket(r.a3b, r.b, c.c4);
  alg.set_bracket(r.ab, r.a2b, c.c5);
  return alg;
}

G2Context::G2Context(const StructureTable& t)
    : sys_(t.system()), c_(G2Constants::from_table(t)), alg_(t.nilradical()), r_(sys_) {}

G2Context::G2Context(const G2Constants& c) : sys_(g2_system()), c_(c), alg_(g2_nilradical(sys_, c)), r_(sys_) {}

std::vector<std::string> G2Context::variable_names() const {
  std::vector<std::string> names(6);
  names[r_.a] = "l[a]";
  names[r_.b] = "l[b]";
  names[r_.ab] = "l[a+b]";
  names[r_.a2b] = "l[2a+b]";
  names[r_.a3b] = "l[3a+b]";
  names[r_.a3b2] = "l[3a+2b]";
  return names;
}

RookPlacement g2_case_placement(const G2Context& ctx, int index) {
  const G2Roots& r = ctx.roots();
  std::vector<int> roots;
  switch (index) {
    case 1: break;
    case 2: roots = {r.a}; break;
    case 3: roots = {r.b}; break;
    case 4: roots = {r.ab}; break;
    case 5: roots = {r.a2b}; break;
    case 6: roots = {r.a3b}; break;
    case 7: roots = {r.a3b2}; break;
    case 8: roots = {r.a, r.b}; break;
    case 9: roots = {r.b, r.a2b}; break;
    case 10: roots = {r.b, r.a3b}; break;
    case 11: roots = {r.ab, r.a3b}; break;
    case 12: roots = {r.a, r.a3b2}; break;
    default: throw std::invalid_argument("G2 case index must be 1..12");
  }
  return RookPlacement::make(ctx.system(), roots);
}

std::optional<int> g2_case_of(const G2Context& ctx, const RookPlacement& d) {
  for (int k = 1; k <= kG2Cases; ++k)
    if (g2_case_placement(ctx, k).same_set(d)) return k;
  return std::nullopt;
}

PolySystem g2_equations(const G2Context& ctx, int index, const XiMap& xi_map) {
  RookPlacement d = g2_case_placement(ctx, index);
  f_form(ctx.system(), d, xi_map);
  const G2Roots& r = ctx.roots();
  const G2Constants& c = ctx.constants();
  auto L = [&](int root) { return Polynomial::variable(6, root); };
  auto xi = [&](int root) { return xi_map.at(root); };
  Polynomial la = L(r.a), lb = L(r.b), l1 = L(r.ab), l2 = L(r.a2b), l3 = L(r.a3b), l32 = L(r.a3b2);

  Polynomial q5 = Rational(2) * c.c2 * lb * l2 - c.c1 * pow(l1, 2);
  Polynomial q6 = Rational(6) * c.c3 * c.c3 * lb * pow(l3, 2) - c.c1 * c.c2 * pow(l2, 3);
  Polynomial q11 = Rational(2) * c.c3 * l1 * l3 - c.c2 * pow(l2, 2);
  Polynomial q7 = Rational(2) * c.c5 * la * l32 - Rational(2) * c.c3 * l1 * l3 + c.c2 * pow(l2, 2);

  PolySystem s;
  auto& e = s.equations;
  auto zero_except = [&](std::vector<int> keep) {
    for (int g : {r.a, r.b, r.ab, r.a2b, r.a3b, r.a3b2})
      if (std::find(keep.begin(), keep.end(), g) == keep.end()) e.push_back(L(g));
  };
  switch (index) {
    case 1: zero_except({}); break;
    case 2: e.push_back(la - xi(r.a)); zero_except({r.a}); break;
    case 3: e.push_back(lb - xi(r.b)); zero_except({r.b}); break;
    case 4: e = {l1 - xi(r.ab), l2, l3, l32}; break;
    case 5: e = {l2 - xi(r.a2b), q5, l3, l32}; break;
    case 6: e = {q6, q11, l3 - xi(r.a3b), l32}; break;
    case 7: e = {q7, l32 - xi(r.a3b2)}; break;
    case 8:
      e = {la - xi(r.a), lb - xi(r.b)};
      zero_except({r.a, r.b});
      break;
    case 9: e = {l2 - xi(r.a2b), q5 - Rational(2) * c.c2 * xi(r.b) * xi(r.a2b), l3, l32}; break;
    case 10:
      e = {q6 - Rational(6) * c.c3 * c.c3 * xi(r.b) * xi(r.a3b) * xi(r.a3b), q11, l3 - xi(r.a3b), l32};
      break;
    case 11: e = {q11 - Rational(2) * c.c3 * xi(r.ab) * xi(r.a3b), l3 - xi(r.a3b), l32}; break;
    // Right-hand side carries the factor 2 forced by the case-7 quadric at f.
    case 12: e = {q7 - Rational(2) * c.c5 * xi(r.a) * xi(r.a3b2), l32 - xi(r.a3b2)}; break;
    default: throw std::invalid_argument("G2 case index must be 1..12");
  }
  return s;
}

std::optional<XiMap> g2_solve_xi(const G2Context& ctx, int index, const LinearForm& lambda) {
  const G2Roots& r = ctx.roots();
  const G2Constants& c = ctx.constants();
  const Rational &la = lambda(r.a), &lb = lambda(r.b), &l1 = lambda(r.ab), &l2 = lambda(r.a2b), &l3 = lambda(r.a3b),
                 &l32 = lambda(r.a3b2);
  XiMap xi;
  switch (index) {
    case 1: break;
    case 2: xi[r.a] = la; break;
    case 3: xi[r.b] = lb; break;
    case 4: xi[r.ab] = l1; break;
    case 5: xi[r.a2b] = l2; break;
    case 6: xi[r.a3b] = l3; break;
    case 7: xi[r.a3b2] = l32; break;
    case 8: xi[r.a] = la; xi[r.b] = lb; break;
    case 9:
      if (l2.is_zero()) return std::nullopt;
      xi[r.a2b] = l2;
      xi[r.b] = (Rational(2) * c.c2 * lb * l2 - c.c1 * l1 * l1) / (Rational(2) * c.c2 * l2);
      break;
    case 10:
      if (l3.is_zero()) return std::nullopt;
      xi[r.a3b] = l3;
      xi[r.b] = (Rational(6) * c.c3 * c.c3 * lb * l3 * l3 - c.c1 * c.c2 * pow(l2, 3)) / (Rational(6) * c.c3 * c.c3 * l3 * l3);
      break;
    case 11:
      if (l3.is_zero()) return std::nullopt;
      xi[r.a3b] = l3;
      xi[r.ab] = (Rational(2) * c.c3 * l1 * l3 - c.c2 * l2 * l2) / (Rational(2) * c.c3 * l3);
      break;
    case 12:
      if (l32.is_zero()) return std::nullopt;
      xi[r.a3b2] = l32;
      xi[r.a] = (Rational(2) * c.c5 * la * l32 - Rational(2) * c.c3 * l1 * l3 + c.c2 * l2 * l2) / (Rational(2) * c.c5 * l32);
      break;
    default: throw std::invalid_argument("G2 case index must be 1..12");
  }
  return xi;
}

bool g2_case_holds(const G2Context& ctx, int index, const LinearForm& lambda) {
  auto xi = g2_solve_xi(ctx, index, lambda);
  if (!xi) return false;
  for (const auto& [root, v] : *xi)
    if (v.is_zero()) return false;
  return g2_equations(ctx, index, *xi).satisfied(lambda);
}

// Decision tree on (l[3a+2b], l[3a+b], l[2a+b], l[a+b], l[b], l[a]).
G2Classification classify(const G2Context& ctx, const LinearForm& lambda) {
  const G2Roots& r = ctx.roots();
  const G2Constants& c = ctx.constants();
  const Rational &la = lambda(r.a), &lb = lambda(r.b), &l1 = lambda(r.ab), &l2 = lambda(r.a2b), &l3 = lambda(r.a3b),
                 &l32 = lambda(r.a3b2);
  int index;
  if (!l32.is_zero()) {
    Rational rhs = c.c3 * l1 * l3 / (c.c5 * l32) - c.c2 * l2 * l2 / (Rational(2) * c.c5 * l32);
    index = la == rhs ? 7 : 12;
  } else if (!l3.is_zero()) {
    Rational ab_rhs = c.c2 * l2 * l2 / (Rational(2) * c.c3 * l3);
    Rational b_rhs = c.c1 * c.c2 * pow(l2, 3) / (Rational(6) * c.c3 * c.c3 * l3 * l3);
    if (l1 != ab_rhs)
      index = 11;
    else
      index = lb == b_rhs ? 6 : 10;
  } else if (!l2.is_zero()) {
    index = lb == c.c1 * l1 * l1 / (Rational(2) * c.c2 * l2) ? 5 : 9;
  } else if (!l1.is_zero()) {
    index = 4;
  } else if (!lb.is_zero()) {
    index = la.is_zero() ? 3 : 8;
  } else if (!la.is_zero()) {
    index = 2;
  } else {
    index = 1;
  }
  auto xi = g2_solve_xi(ctx, index, lambda);
  if (!xi) throw InconsistencyError("classifier branch without a pinned value");
  return {index, *xi};
}

std::vector<LinearForm> basic_subvariety_samples(const G2Context& ctx, const RookPlacement& d, const XiMap& xi,
                                                 int count, std::uint64_t seed) {
  std::vector<LinearForm> out;
  const int dim = ctx.algebra().dim();
  for (int i = 0; i < count; ++i) {
    LinearForm total = zero_form(ctx.system());
    for (int root : d.roots()) {
      XiMap single{{root, xi.at(root)}};
      LinearForm f = f_form(ctx.system(), RookPlacement::make(ctx.system(), {root}), single);
      RationalVector x = RationalVector::Zero(dim);
      if (!(seed == 0 && i == 0)) {
        RationalSampler s(derive_seed(derive_seed(seed, static_cast<std::uint64_t>(i)), static_cast<std::uint64_t>(root)));
        x = s.vector(dim);
      }
      total += coadjoint_act(ctx.algebra(), x, f);
    }
    out.push_back(total);
  }
  return out;
}

bool CaseReport::pass() const {
  if (classify_mismatches) return false;
  for (const EquationResidual& e : residuals)
    if (e.nonzero) return false;
  return true;
}

CaseReport verify_case(const G2Context& ctx, int index, const XiMap& xi, int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  RookPlacement d = g2_case_placement(ctx, index);
  PolySystem system = g2_equations(ctx, index, xi);
  auto names = ctx.variable_names();
  CaseReport rep;
  rep.index = index;
  rep.placement = d.str(ctx.system());
  rep.xi = xi;
  for (const Polynomial& p : system.equations) rep.residuals.push_back({p.str(names) + " = 0", 0, Rational(0)});

  auto check = [&](const LinearForm& lambda, const std::string& witness) {
    ++rep.samples;
    auto res = system.residuals(lambda);
    bool bad = false;
    for (size_t k = 0; k < res.size(); ++k) {
      if (res[k].is_zero()) continue;
      bad = true;
      ++rep.residuals[k].nonzero;
      if (abs(res[k]) > rep.residuals[k].max_abs) rep.residuals[k].max_abs = abs(res[k]);
    }
    G2Classification cl = classify(ctx, lambda);
    if (cl.index != index || cl.xi != xi) {
      bad = true;
      ++rep.classify_mismatches;
    }
    if (bad && !rep.counterexample)
      rep.counterexample = witness + ", lambda=" + vector_string(lambda) + ", classified as case " +
                           std::to_string(cl.index) + " " + xi_string(ctx.system(), cl.xi);
  };

  std::vector<LinearForm> o_samples = basic_subvariety_samples(ctx, d, xi, samples, seed);
  for (int i = 0; i < samples; ++i) check(o_samples[i], "basic-subvariety sample " + std::to_string(i));

  LinearForm f = f_form(ctx.system(), d, xi);
  auto xs = random_nilradical_elements(ctx.algebra().dim(), samples, seed);
  for (int i = 0; i < samples; ++i) check(coadjoint_act(ctx.algebra(), xs[i], f), "orbit sample x=" + vector_string(xs[i]));
  return rep;
}

std::vector<DimensionRow> g2_dimension_report(const G2Context& ctx) {
  std::vector<DimensionRow> rows;
  for (int k = 1; k <= kG2Cases; ++k) {
    RookPlacement d = g2_case_placement(ctx, k);
    XiMap xi = constant_xi(d);
    LinearForm f = f_form(ctx.system(), d, xi);
    DimensionRow row;
    row.index = k;
    row.placement = d.str(ctx.system());
    row.singular_count = basic_dim(ctx.system(), d.roots());
    row.jacobian_rank = static_cast<int>(exact_rank(g2_equations(ctx, k, xi).jacobian(f)));
    row.variety_dim = 6 - row.jacobian_rank;
    row.kirillov = kirillov_rank(ctx.algebra(), f);
    row.flagged = row.kirillov < row.singular_count;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace rook_orbits
