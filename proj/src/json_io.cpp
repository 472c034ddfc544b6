#include "rook_orbits/json_io.hpp"

#include <stdexcept>

namespace rook_orbits {

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw std::invalid_argument("rational must be a \"p/q\" string or an integer");
}

json roots_to_json(const RootSystem& sys, const std::vector<int>& roots) {
  json a = json::array();
  for (int r : roots) a.push_back(sys.root_string(r));
  return a;
}

json xi_to_json(const RootSystem& sys, const XiMap& xi) {
  json o = json::object();
  for (const auto& [r, v] : xi) o[sys.root_string(r)] = v.str();
  return o;
}

json form_to_json(const RootSystem& sys, const LinearForm& f) {
  json c = json::object();
  for (int i = 0; i < f.size(); ++i)
    if (!f(i).is_zero()) c[sys.root_string(i)] = f(i).str();
  return json{{"coeffs", c}};
}

LinearForm form_from_json(const RootSystem& sys, const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_object())
    throw std::invalid_argument("form needs a \"coeffs\" object");
  LinearForm f = zero_form(sys);
  for (const auto& [key, val] : j.at("coeffs").items()) {
    auto idx = sys.parse_root(key);
    if (!idx) throw std::invalid_argument("'" + key + "' is not a positive root of " + sys.kind().name());
    f(*idx) = rational_from_json(val);
  }
  return f;
}

json matrix_form_to_json(const MatrixForm& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

MatrixForm matrix_form_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix form must be a non-empty array");
  if (j.front().is_array()) {
    const size_t n = j.size();
    MatrixForm m(n, n);
    for (size_t i = 0; i < n; ++i) {
      if (!j[i].is_array() || j[i].size() != n) throw std::invalid_argument("matrix form must be square");
      for (size_t k = 0; k < n; ++k) m(i, k) = rational_from_json(j[i][k]);
    }
    return m;
  }
  size_t n = 0;
  while (n * n < j.size()) ++n;
  if (n * n != j.size()) throw std::invalid_argument("flat matrix form needs n*n entries");
  MatrixForm m(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) m(i, k) = rational_from_json(j[i * n + k]);
  return m;
}

json decomposition_to_json(const TypeA& a, const Decomposition& d) {
  json dd = json::array(), xi = json::array();
  for (int r : d.placement.roots()) {
    auto [i, j] = a.ij(r);
    dd.push_back({i, j});
    xi.push_back(d.xi.at(r).str());
  }
  return json{{"D", dd}, {"xi", xi}};
}

json to_json(const RootSystem& sys, const CaseReport& r) {
  json res = json::array();
  for (const auto& e : r.residuals)
    res.push_back({{"equation", e.equation}, {"nonzero", e.nonzero}, {"max_abs", e.max_abs.str()}});
  json o{{"case", r.index},
         {"placement", r.placement},
         {"xi", xi_to_json(sys, r.xi)},
         {"samples", r.samples},
         {"residuals", res},
         {"classify_mismatches", r.classify_mismatches},
         {"status", r.pass() ? "PASS" : "FAIL"}};
  if (r.counterexample) o["counterexample"] = *r.counterexample;
  return o;
}

json to_json(const RootSystem&, const DimensionRow& r) {
  return json{{"case", r.index},           {"placement", r.placement}, {"singular_count", r.singular_count},
              {"jacobian_rank", r.jacobian_rank}, {"variety_dim", r.variety_dim}, {"kirillov_rank", r.kirillov},
              {"status", r.flagged ? "FLAG" : "PASS"}};
}

json to_json(const MinorCheck& c) {
  return json{{"step", c.step},
              {"candidate", c.candidate},
              {"rows", c.rows},
              {"cols", c.cols},
              {"value", c.value.str()},
              {"must_vanish", c.must_vanish},
              {"ok", c.ok()}};
}

json to_json(const RootSystem& sys, const TableRowReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  json printed = json::array();
  for (const auto& p : r.printed_minors)
    printed.push_back({{"rows", p.rows},
                       {"cols", p.cols},
                       {"printed", p.printed.str()},
                       {"computed", p.computed.str()},
                       {"abs_agree", p.abs_agree()}});
  return json{{"row", r.row},
              {"roots", roots_to_json(sys, r.roots)},
              {"printed_order", r.printed_order},
              {"order_is_permutation", r.order_is_permutation},
              {"order_used", r.order_used},
              {"is_rook_placement", r.is_rook_placement},
              {"printed_tuple", r.printed_tuple},
              {"solutions", r.solutions},
              {"unique", r.unique},
              {"match", r.match},
              {"checks", checks},
              {"printed_minors", printed},
              {"note", r.note},
              {"status", status_name(r.status)}};
}

json to_json(const RootSystem& sys, const TableReport& r) {
  json rows = json::array();
  for (const auto& x : r.rows) rows.push_back(to_json(sys, x));
  return json{{"rows", rows},
              {"matches", r.matches},
              {"uniqueness", r.uniqueness},
              {"row16_flagged", r.row16_flagged},
              {"status", status_name(r.status())}};
}

json to_json(const MaximalReport& r) {
  return json{{"maximal_rook_placements", r.maximal_all},
              {"maximal_orthogonal", r.maximal_orthogonal},
              {"printed", r.printed_count},
              {"missing", r.missing},
              {"extra", r.extra},
              {"not_rook_placements", r.not_rook},
              {"beta1_maximal", r.beta1_maximal},
              {"second_root_maximal", r.second_root_maximal},
              {"two_maximal_members", r.two_maximal_members},
              {"printed_second_root_maximal", r.printed_second_root},
              {"status", status_name(r.status())}};
}

json to_json(const RootSystem& sys, const Prop42Report& r) {
  json rows = json::array();
  for (const auto& x : r.rows)
    rows.push_back({{"placement", "D" + std::to_string(x.entry.placement)},
                    {"beta0", x.entry.beta0},
                    {"alpha0", x.entry.alpha0},
                    {"literal", x.literal},
                    {"weak", x.weak},
                    {"witnesses", roots_to_json(sys, x.witnesses)},
                    {"status", x.literal ? "PASS" : "FAIL"}});
  return json{{"rows", rows}, {"passed", r.passed}, {"total", r.rows.size()}, {"status", status_name(r.status())}};
}

json to_json(const RootSystem& sys, const Certificate& c) {
  json per = json::array();
  for (int b : c.placement.roots()) {
    const Justification& j = c.per_root.at(b);
    json o{{"root", sys.root_string(b)}, {"kind", kind_name(j.kind)}};
    if (j.kind == JustificationKind::Prop42) o["alpha0"] = j.alpha0 + 1;
    if (j.kind == JustificationKind::Prop43) {
      std::vector<int> so;
      for (int a : j.simple_order) so.push_back(a + 1);
      o["simple_order"] = so;
      o["d_order"] = roots_to_json(sys, j.d_order);
      o["tuple"] = j.tuple;
    }
    if (j.kind == JustificationKind::Lemma41) o["decomposition"] = roots_to_json(sys, j.decomposition);
    if (!j.reason.empty()) o["reason"] = j.reason;
    json app = json::array();
    if (auto it = c.applicable.find(b); it != c.applicable.end())
      for (auto k : it->second) app.push_back(kind_name(k));
    o["applicable"] = app;
    per.push_back(o);
  }
  return json{{"placement", roots_to_json(sys, c.placement.roots())},
              {"per_root", per},
              {"complete", c.complete()},
              {"unjustified", roots_to_json(sys, c.unjustified())}};
}

json to_json(const RootSystem& sys, const CertifyAllSummary& s) {
  json counts = json::object();
  for (const auto& [k, n] : s.counts) counts[kind_name(k)] = n;
  json incomplete = json::array();
  for (const auto& c : s.certificates)
    if (!c.complete()) incomplete.push_back(to_json(sys, c));
  return json{{"placements", s.placements},
              {"complete", s.complete},
              {"counts", counts},
              {"incomplete", incomplete},
              {"status", s.all_complete() ? "PASS" : "FAIL"}};
}

json to_json(const RootSystem& sys, const ExtraReport& r) {
  json rows = json::array();
  for (const auto& x : r.rows)
    rows.push_back({{"name", x.name},
                    {"certificate", to_json(sys, x.certificate)},
                    {"named_roots", roots_to_json(sys, x.named_roots)},
                    {"tools_match", x.tools_match}});
  return json{{"rows", rows}, {"status", status_name(r.status())}};
}

}  // namespace rook_orbits
