// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "rook_orbits/andre.hpp"
#include "rook_orbits/f4_reports.hpp"
#include "rook_orbits/g2_orbits.hpp"
#include "rook_orbits/sampling.hpp"

using namespace rook_orbits;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(const std::string& id, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("criterion %-3s %s  %s  [%.2fs]\n", id.c_str(), o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return "{" + s + "}";
}

const ReferenceData& reference(const RootSystem& f4) {
  static ReferenceData d = load_reference_data(resolve_data_path(std::nullopt, ROOK_ORBITS_TEST_DATA), f4);
  return d;
}

Outcome root_counts() {
  std::ostringstream s;
  bool ok = RootSystem(SystemKind::g2()).num_positive() == 6 && RootSystem(SystemKind::f4()).num_positive() == 24;
  for (int n = 2; n <= 8; ++n) {
    RootSystem a(SystemKind::a(n - 1));
    ok = ok && a.num_positive() == n * (n - 1) / 2 &&
         static_cast<int>(oracle::weyl_positive_roots(a.gram()).size()) == a.num_positive();
  }
  s << "G2 6, F4 24, A(n-1) n(n-1)/2 for n<=8";
  return {ok, s.str()};
}

Outcome chevalley() {
  bool ok = true;
  for (SystemKind k : {SystemKind::g2(), SystemKind::f4()}) {
    StructureTable t{RootSystem(k)};
    ok = ok && t.antisymmetry_violations().empty() && t.jacobi_violations().empty();
  }
  StructureTable g2{RootSystem(SystemKind::g2())};
  G2Constants c = G2Constants::from_table(g2);
  std::vector<Rational> mags;
  for (const Rational& v : c.values()) mags.push_back(abs(v));
  bool m = mags == std::vector<Rational>{Rational(1), Rational(2), Rational(3), Rational(1), Rational(3)};
  bool rel = c.c1 * c.c5 == c.c3 * c.c4;
  return {ok && m && rel, std::string("antisymmetry+Jacobi on G2,F4; |c| = (1,2,3,1,3); c1c5 = c3c4: ") +
                              (rel ? "yes" : "no")};
}

Outcome g2_orbit_in_variety() {
  const int samples = 200;
  std::vector<G2Context> ctxs;
  ctxs.emplace_back(StructureTable(RootSystem(SystemKind::g2())));
  for (int t = 0; t < 5; ++t) ctxs.emplace_back(G2Constants::random(derive_seed(2718, t)));
  int checked = 0, bad = 0;
  for (size_t t = 0; t < ctxs.size(); ++t)
    for (int k = 1; k <= kG2Cases; ++k) {
      RookPlacement d = g2_case_placement(ctxs[t], k);
      CaseReport r = verify_case(ctxs[t], k, random_xi(d, derive_seed(t, k)), samples, derive_seed(t, 100 + k));
      checked += r.samples;
      bad += !r.pass();
    }
  return {bad == 0, std::to_string(checked) + " exact samples over 12 cases x 6 constant tuples, " +
                        std::to_string(bad) + " failing cases"};
}

Outcome g2_partition() {
  G2Context ctx{StructureTable(RootSystem(SystemKind::g2()))};
  RationalSampler s(31415);
  int bad = 0;
  for (int n = 0; n < 1000; ++n) {
    LinearForm l = zero_form(ctx.system());
    for (int k = 0; k < 6; ++k)
      if (!s.coin(35)) l(k) = s.nonzero();
    G2Classification c = classify(ctx, l);
    int holds = 0;
    for (int k = 1; k <= kG2Cases; ++k) holds += g2_case_holds(ctx, k, l);
    if (holds != 1 || !g2_equations(ctx, c.index, c.xi).satisfied(l)) ++bad;
  }
  StructureTable t(ctx.system());
  int trips = 0, trip_bad = 0;
  for (int k = 1; k <= kG2Cases; ++k) {
    RookPlacement d = g2_case_placement(ctx, k);
    for (int rep = 0; rep < 5; ++rep) {
      XiMap xi = random_xi(d, derive_seed(k, rep));
      for (const LinearForm& l : orbit_samples(t, d, xi, 20, derive_seed(50 + k, rep))) {
        ++trips;
        G2Classification c = classify(ctx, l);
        trip_bad += !(c.index == k && c.xi == xi);
      }
    }
  }
  return {bad == 0 && trip_bad == 0, "1000 forms: " + std::to_string(bad) + " not in exactly one case; " +
                                         std::to_string(trips) + " round trips, " + std::to_string(trip_bad) +
                                         " wrong"};
}

Outcome g2_remark_signals() {
  G2Context ctx{StructureTable(RootSystem(SystemKind::g2()))};
  bool ok = true;
  std::vector<int> flagged;
  for (const DimensionRow& r : g2_dimension_report(ctx)) {
    if (r.flagged) flagged.push_back(r.index);
    if (r.index == 11)
      ok = ok && r.kirillov == 2 && r.singular_count == 3;
    else
      ok = ok && r.kirillov == r.singular_count;
  }
  ok = ok && flagged == std::vector<int>{11};
  const G2Roots& g = ctx.roots();
  StructureTable t(ctx.system());
  RookPlacement d = RookPlacement::make(ctx.system(), {g.a, g.ab});
  XiMap xi{{g.a, Rational(3)}, {g.ab, Rational(-5, 2)}};
  int collapse_bad = 0;
  for (const LinearForm& l : orbit_samples(t, d, xi, 100, 99)) {
    G2Classification c = classify(ctx, l);
    collapse_bad += !(c.index == 4 && c.xi == XiMap{{g.ab, Rational(-5, 2)}});
  }
  return {ok && collapse_bad == 0, "rank = |S(D)| except case " + join(flagged) + " (2 < 3); {a, a+b} samples -> case 4: " +
                                       std::to_string(100 - collapse_bad) + "/100"};
}

Outcome andre_equivalence() {
  int act_bad = 0, pairs = 0, minor_bad = 0, trip_bad = 0, trips = 0;
  for (int n = 3; n <= 6; ++n) {
    TypeA a(n);
    StructureTable t(a.system());
    std::vector<int> signs = matrix_unit_signs(a, t);
    const int p = a.system().num_positive();
    RationalSampler s(600 + n);
    for (int k = 0; k < 50; ++k, ++pairs) {
      RationalVector x = s.vector(p);
      LinearForm lam = s.vector(p);
      MatrixForm lhs = matrix_act(unipotent_element(a, signs, x), to_matrix_form(a, signs, lam));
      act_bad += lhs != to_matrix_form(a, signs, coadjoint_act(t, AlgebraElement::from_nilradical(x), lam));
    }
    auto ps = enumerate_rook_placements(a.system());
    for (size_t k = 0; k < ps.size(); k += 1 + ps.size() / 30) {
      const RookPlacement& d = ps[k];
      XiMap xi = random_xi(d, derive_seed(n, k));
      XiMap mxi;
      for (const auto& [r, v] : xi) mxi[r] = v * Rational(signs[r]);
      MatrixForm f = matrix_f_form(a, d, mxi);
      auto reg = regular_roots(a.system(), d.roots());
      for (const LinearForm& l : orbit_samples(t, d, xi, 5, derive_seed(n + 10, k))) {
        MatrixForm m = to_matrix_form(a, signs, l);
        for (int al : reg) minor_bad += delta_minor(a, d.roots(), al, m) != delta_minor(a, d.roots(), al, f);
        Decomposition dec = decompose(a, m);
        ++trips;
        trip_bad += !(dec.placement.same_set(d) && dec.xi == mxi);
      }
    }
  }
  TypeA a5(5);
  auto ps = enumerate_rook_placements(a5.system());
  RationalSampler s(55);
  int dim_bad = 0;
  for (int k = 0; k < 50; ++k) {
    const RookPlacement& d = ps[s.uniform(0, static_cast<int>(ps.size()) - 1)];
    MatrixForm f = matrix_f_form(a5, d, random_xi(d, derive_seed(5, k)));
    int rank = oracle::gauss_rank(minor_jacobian(a5, d.roots(), f));
    dim_bad += a5.system().num_positive() - rank != basic_dim(a5.system(), d.roots());
  }
  bool ok = act_bad == 0 && minor_bad == 0 && trip_bad == 0 && dim_bad == 0;
  return {ok, std::to_string(pairs) + " (g, lambda) pairs, " + std::to_string(act_bad) + " disagree; minor changes " +
                  std::to_string(minor_bad) + "; " + std::to_string(trips) + " decompositions, " +
                  std::to_string(trip_bad) + " wrong; dim mismatches " + std::to_string(dim_bad) + "/50"};
}

}  // namespace

int main() {
  RootSystem f4(SystemKind::f4());
  criterion("1", root_counts);
  criterion("2", chevalley);
  criterion("3", g2_orbit_in_variety);
  criterion("4", g2_partition);
  criterion("5", g2_remark_signals);
  criterion("6", andre_equivalence);
  criterion("7a", [&] {
    MaximalReport r = verify_maximal_list(f4, reference(f4));
    return Outcome{r.sets_equal() && r.not_rook.empty(),
                   std::to_string(r.maximal_orthogonal) + " computed vs " + std::to_string(r.printed_count) +
                       " printed; missing " + std::to_string(r.missing.size()) + ", extra " +
                       std::to_string(r.extra.size())};
  });
  criterion("7b", [&] {
    MaximalReport r = verify_maximal_list(f4, reference(f4));
    return Outcome{r.second_root_matches(), "beta_2 maximal in D" + join(r.second_root_maximal) + ", printed D" +
                                                join(r.printed_second_root) + "; two maximal members in D" +
                                                join(r.two_maximal_members)};
  });
  criterion("8", [&] {
    TableReport r = verify_prop44_table(f4, reference(f4));
    std::string detail = std::to_string(r.matches) + "/24 rows match (need 23); row 16 flagged: " +
                         (r.row16_flagged ? "yes" : "no") + "; uniqueness: " + (r.uniqueness ? "yes" : "no");
    for (const auto& row : r.rows) {
      if (row.match) continue;
      detail += "; row " + std::to_string(row.row) + " found ";
      detail += row.solutions.empty() ? std::string("none") : "(" + join(row.solutions.front()).substr(1);
      if (!row.solutions.empty()) detail.back() = ')';
      if (!row.is_rook_placement) detail += " (not a rook placement)";
    }
    for (const auto& row : r.rows)
      for (const auto& m : row.printed_minors)
        if (!m.abs_agree())
          detail += "; row " + std::to_string(row.row) + " printed minor " + m.printed.str() + " vs " + m.computed.str();
    bool ok = r.uniqueness && r.row16_flagged && r.matches >= 23;
    return Outcome{ok, detail};
  });
  criterion("9", [&] {
    Prop42Report r = verify_prop42_list(f4, reference(f4));
    std::string detail = std::to_string(r.passed) + "/26 pass";
    for (const auto& row : r.rows)
      if (!row.literal)
        detail += "; D" + std::to_string(row.entry.placement) + " beta" + std::to_string(row.entry.beta0) + " alpha" +
                  std::to_string(row.entry.alpha0) + " fails (weak reading " + (row.weak ? "holds" : "fails") + ")";
    return Outcome{r.status() == Status::Pass, detail};
  });
  criterion("10", [&] {
    CertifyAllSummary s = certify_all(f4);
    ExtraReport e = verify_extra_placements(f4, reference(f4));
    std::string detail = std::to_string(s.complete) + "/" + std::to_string(s.placements) + " complete;";
    for (const auto& [k, n] : s.counts) detail += " " + kind_name(k) + " " + std::to_string(n);
    detail += "; D25..D32 named tools: " + std::string(e.status() == Status::Pass ? "match" : "mismatch");
    return Outcome{s.all_complete() && e.status() == Status::Pass, detail};
  });
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
