#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "rook_orbits/json_io.hpp"
#include "rook_orbits/sampling.hpp"

#ifndef ROOK_ORBITS_DEFAULT_DATA
#define ROOK_ORBITS_DEFAULT_DATA "data/reference_data.json"
#endif

namespace rook_orbits::cli {

namespace {

struct RunConfig {
  std::string system;
  std::uint64_t seed = 1;
  int samples = 200;
  std::string output = "text";
  std::string data_file;
  bool data_given = false;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

int exit_code(Status s) { return s == Status::Fail ? 1 : 0; }

// Inline JSON, or @path to read it from a file.
json read_json_arg(const std::string& text) {
  std::string body = text;
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw UsageError("cannot open " + text.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return json::parse(body);
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad JSON argument: ") + e.what());
  }
}

RootSystem system_of(const RunConfig& cfg, const std::string& fallback) {
  try {
    return RootSystem(SystemKind::parse(cfg.system.empty() ? fallback : cfg.system));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void require_system(const RootSystem& sys, SystemKind kind, const std::string& cmd) {
  if (!(sys.kind() == kind)) throw UsageError(cmd + " needs --system " + kind.name());
}

ReferenceData load_data(const RunConfig& cfg, const RootSystem& f4) {
  std::optional<std::string> flag;
  if (cfg.data_given) flag = cfg.data_file;
  return load_reference_data(resolve_data_path(flag, ROOK_ORBITS_DEFAULT_DATA), f4);
}

void emit(std::ostream& out, const RunConfig& cfg, const std::string& command, json body, const std::string& text,
          Status status) {
  if (cfg.output == "json") {
    json o{{"schema", 1}, {"command", command}, {"status", status_name(status)}, {"report", std::move(body)}};
    out << o.dump(2) << "\n";
  } else {
    out << text;
    out << command << ": " << status_name(status) << "\n";
  }
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string placement_text(const RootSystem& sys, const std::vector<int>& roots) {
  std::string s = "{";
  for (size_t i = 0; i < roots.size(); ++i) s += (i ? "; " : "") + sys.root_string(roots[i]);
  return s + "}";
}

// --- roots / rooks

int cmd_roots(const RunConfig& cfg, std::ostream& out) {
  RootSystem sys = system_of(cfg, "g2");
  json roots = json::array();
  std::ostringstream t;
  t << sys.kind().name() << ": " << sys.num_positive() << " positive roots\n";
  for (int i = 0; i < sys.num_positive(); ++i) {
    roots.push_back({{"index", i}, {"root", sys.root_string(i)}, {"height", sys.height(i)}});
    t << "  " << i << "  " << sys.root_string(i) << "  height " << sys.height(i) << "\n";
  }
  emit(out, cfg, "roots", {{"system", sys.kind().name()}, {"count", sys.num_positive()}, {"roots", roots}}, t.str(),
       Status::Pass);
  return 0;
}

int cmd_rooks(const RunConfig& cfg, const std::string& filter_text, bool maximal, bool list, std::ostream& out) {
  RootSystem sys = system_of(cfg, "g2");
  PlacementFilter f;
  try {
    f = parse_filter(filter_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto ps = maximal ? maximal_rook_placements(sys, f) : enumerate_rook_placements(sys, f);
  json arr = json::array();
  std::ostringstream t;
  t << sys.kind().name() << " " << (maximal ? "maximal " : "") << filter_name(f) << " rook placements: " << ps.size()
    << "\n";
  for (const auto& p : ps) {
    arr.push_back(roots_to_json(sys, p.roots()));
    if (list) t << "  " << placement_text(sys, p.roots()) << "\n";
  }
  emit(out, cfg, "rooks",
       {{"system", sys.kind().name()},
        {"filter", filter_name(f)},
        {"maximal", maximal},
        {"count", ps.size()},
        {"placements", arr}},
       t.str(), Status::Pass);
  return 0;
}

// --- andre

RookPlacement placement_from_pairs(const TypeA& a, const json& j) {
  if (!j.is_array()) throw UsageError("placement must be a list of [i,j] pairs");
  std::vector<int> roots;
  for (const json& p : j) {
    if (!p.is_array() || p.size() != 2) throw UsageError("placement entries must be [i,j]");
    int i = p[0].get<int>(), k = p[1].get<int>();
    if (i < 1 || k <= i || k > a.n()) throw UsageError("placement entry out of range");
    roots.push_back(a.root_index(i, k));
  }
  try {
    return RookPlacement::make(a.system(), roots);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

MatrixForm matrix_arg(const TypeA& a, const std::string& text) {
  MatrixForm m;
  try {
    m = matrix_form_from_json(read_json_arg(text));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (m.rows() != a.n() || !is_matrix_form(a, m)) throw UsageError("form must be a strictly lower-triangular n x n matrix");
  return m;
}

int cmd_andre_decompose(const RunConfig& cfg, int n, const std::string& form, std::ostream& out) {
  TypeA a(n);
  MatrixForm m = matrix_arg(a, form);
  Decomposition d = decompose(a, m);
  std::ostringstream t;
  t << "D = {";
  for (size_t k = 0; k < d.placement.roots().size(); ++k) {
    auto [i, j] = a.ij(d.placement.roots()[k]);
    t << (k ? ", " : "") << "(" << i << "," << j << "): " << d.xi.at(d.placement.roots()[k]).str();
  }
  t << "}\n";
  emit(out, cfg, "andre decompose", decomposition_to_json(a, d), t.str(), Status::Pass);
  return 0;
}

int cmd_andre_membership(const RunConfig& cfg, int n, const std::string& placement, const std::string& xi_text,
                         const std::string& form, std::ostream& out) {
  TypeA a(n);
  RookPlacement d = placement_from_pairs(a, read_json_arg(placement));
  json xj = read_json_arg(xi_text);
  if (!xj.is_array() || xj.size() != d.roots().size()) throw UsageError("xi needs one value per placement root");
  XiMap xi;
  try {
    for (size_t k = 0; k < xj.size(); ++k) xi[d.roots()[k]] = rational_from_json(xj[k]);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  MatrixForm m = matrix_arg(a, form);
  bool in = membership(a, d, xi, m);
  emit(out, cfg, "andre membership", {{"member", in}}, std::string("member: ") + (in ? "yes" : "no") + "\n",
       Status::Pass);
  return 0;
}

// --- g2

int cmd_g2_verify(const RunConfig& cfg, int which, std::ostream& out) {
  RootSystem sys = system_of(cfg, "g2");
  require_system(sys, SystemKind::g2(), "g2 verify");
  if (cfg.samples < 1) throw UsageError("--samples must be >= 1");
  StructureTable table(sys);
  G2Context ctx(table);
  json reports = json::array();
  std::ostringstream t;
  Status status = Status::Pass;
  for (int k = 1; k <= kG2Cases; ++k) {
    if (which != 0 && k != which) continue;
    RookPlacement d = g2_case_placement(ctx, k);
    XiMap xi = random_xi(d, derive_seed(cfg.seed, static_cast<std::uint64_t>(k)));
    CaseReport r = verify_case(ctx, k, xi, cfg.samples, derive_seed(cfg.seed, 100 + static_cast<std::uint64_t>(k)));
    reports.push_back(to_json(sys, r));
    if (!r.pass()) status = Status::Fail;
    t << "case " << k << " " << r.placement << ": " << (r.pass() ? "PASS" : "FAIL") << " (" << r.samples
      << " samples, " << r.residuals.size() << " equations)\n";
    if (r.counterexample) t << "  counterexample: " << *r.counterexample << "\n";
  }
  emit(out, cfg, "g2 verify", {{"seed", cfg.seed}, {"samples", cfg.samples}, {"cases", reports}}, t.str(), status);
  return exit_code(status);
}

int cmd_g2_classify(const RunConfig& cfg, const std::string& form, std::ostream& out) {
  RootSystem sys = system_of(cfg, "g2");
  require_system(sys, SystemKind::g2(), "g2 classify");
  StructureTable table(sys);
  G2Context ctx(table);
  LinearForm f;
  try {
    f = form_from_json(sys, read_json_arg(form));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  G2Classification c = classify(ctx, f);
  std::vector<int> holding;
  for (int k = 1; k <= kG2Cases; ++k)
    if (g2_case_holds(ctx, k, f)) holding.push_back(k);
  Status status = holding == std::vector<int>{c.index} ? Status::Pass : Status::Fail;
  std::ostringstream t;
  t << "case " << c.index << " " << g2_case_placement(ctx, c.index).str(sys) << "\n";
  for (const auto& [r, v] : c.xi) t << "  xi(" << sys.root_string(r) << ") = " << v.str() << "\n";
  emit(out, cfg, "g2 classify", {{"case", c.index}, {"xi", xi_to_json(sys, c.xi)}, {"systems_holding", holding}},
       t.str(), status);
  return exit_code(status);
}

int cmd_g2_dims(const RunConfig& cfg, std::ostream& out) {
  RootSystem sys = system_of(cfg, "g2");
  require_system(sys, SystemKind::g2(), "g2 dims");
  StructureTable table(sys);
  G2Context ctx(table);
  json rows = json::array();
  std::ostringstream t;
  for (const DimensionRow& r : g2_dimension_report(ctx)) {
    rows.push_back(to_json(sys, r));
    t << "case " << r.index << " " << r.placement << ": |S| = " << r.singular_count << ", kirillov rank "
      << r.kirillov << ", variety dim " << r.variety_dim << (r.flagged ? "  FLAG" : "") << "\n";
  }
  emit(out, cfg, "g2 dims", {{"rows", rows}}, t.str(), Status::Pass);
  return 0;
}

// --- f4

int cmd_f4_maximal(const RunConfig& cfg, std::ostream& out) {
  RootSystem sys = system_of(cfg, "f4");
  require_system(sys, SystemKind::f4(), "f4 maximal");
  ReferenceData data = load_data(cfg, sys);
  MaximalReport r = verify_maximal_list(sys, data);
  Status status = !r.sets_equal() || !r.not_rook.empty() || !r.beta1_maximal ? Status::Fail
                  : r.second_root_matches()                                   ? Status::Pass
                                                                              : Status::Flag;
  std::ostringstream t;
  t << "inclusion-maximal rook placements: " << r.maximal_all << "\n"
    << "inclusion-maximal orthogonal rook placements: " << r.maximal_orthogonal << " (printed " << r.printed_count
    << ")\n"
    << "set equality: " << (r.sets_equal() ? "yes" : "no") << "\n"
    << "beta_2 maximal in: D" << join(r.second_root_maximal) << " (printed D" << join(r.printed_second_root) << ")\n"
    << "two maximal members in: D" << join(r.two_maximal_members) << "\n";
  emit(out, cfg, "f4 maximal", to_json(r), t.str(), status);
  return exit_code(status);
}

int cmd_f4_table(const RunConfig& cfg, int row, std::ostream& out) {
  RootSystem sys = system_of(cfg, "f4");
  require_system(sys, SystemKind::f4(), "f4 table");
  if (row < 0 || row > 24) throw UsageError("--row must be in 1..24");
  ReferenceData data = load_data(cfg, sys);
  TableReport r = verify_prop44_table(sys, data, row);
  Status status = !r.uniqueness ? Status::Fail : r.status() == Status::Pass ? Status::Pass : Status::Flag;
  std::ostringstream t;
  for (const auto& x : r.rows) {
    t << "row " << x.row << " " << placement_text(sys, x.roots) << " order " << join(x.order_used) << ": printed ("
      << join(x.printed_tuple) << "), found";
    for (const auto& s : x.solutions) t << " (" << join(s) << ")";
    if (x.solutions.empty()) t << " none";
    t << "  " << status_name(x.status);
    if (!x.note.empty()) t << "  [" << x.note << "]";
    t << "\n";
    for (const auto& p : x.printed_minors)
      t << "  minor rows " << join(p.rows) << " cols " << join(p.cols) << ": printed " << p.printed.str()
        << ", computed " << p.computed.str() << "\n";
  }
  t << "matching rows: " << r.matches << "/" << r.rows.size() << ", uniqueness " << (r.uniqueness ? "yes" : "no")
    << "\n";
  emit(out, cfg, "f4 table", to_json(sys, r), t.str(), status);
  return exit_code(status);
}

std::vector<int> f4_placement_arg(const RootSystem& sys, const RunConfig& cfg, const std::string& text) {
  if (!text.empty() && (text[0] == 'D' || text[0] == 'd')) {
    ReferenceData data = load_data(cfg, sys);
    try {
      return data.placement(std::stoi(text.substr(1))).roots;
    } catch (const std::exception&) {
      throw UsageError("unknown placement " + text);
    }
  }
  json j = read_json_arg(text);
  if (!j.is_array()) throw UsageError("placement must be a list of root strings");
  std::vector<int> roots;
  for (const json& r : j) {
    std::optional<int> idx;
    try {
      idx = sys.parse_root(r.get<std::string>());
    } catch (const std::exception&) {
    }
    if (!idx) throw UsageError("not a positive root: " + r.dump());
    roots.push_back(*idx);
  }
  return roots;
}

int cmd_f4_certify(const RunConfig& cfg, bool all, const std::string& placement, std::ostream& out) {
  RootSystem sys = system_of(cfg, "f4");
  require_system(sys, SystemKind::f4(), "f4 certify");
  if (all == !placement.empty()) throw UsageError("give exactly one of --all or --placement");
  std::ostringstream t;
  if (all) {
    CertifyAllSummary s = certify_all(sys, cfg.output != "json");
    t << "orthogonal non-singular placements: " << s.placements << ", complete: " << s.complete << "\n";
    for (const auto& [k, n] : s.counts) t << "  " << kind_name(k) << ": " << n << "\n";
    Status status = s.all_complete() ? Status::Pass : Status::Fail;
    emit(out, cfg, "f4 certify", to_json(sys, s), t.str(), status);
    return exit_code(status);
  }
  std::vector<int> roots = f4_placement_arg(sys, cfg, placement);
  RookPlacement d;
  try {
    d = RookPlacement::make(sys, roots);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!is_orthogonal(sys, roots)) throw UsageError("placement is not orthogonal");
  Certificate c = certify_distinctness(sys, d);
  for (int b : d.roots()) {
    const Justification& j = c.per_root.at(b);
    t << "  " << sys.root_string(b) << ": " << kind_name(j.kind);
    if (j.kind == JustificationKind::Prop42) t << " alpha_" << j.alpha0 + 1;
    if (j.kind == JustificationKind::Prop43) t << " tuple (" << join(j.tuple) << ")";
    if (!j.reason.empty()) t << " (" << j.reason << ")";
    t << "\n";
  }
  Status status = c.complete() ? Status::Pass : Status::Fail;
  emit(out, cfg, "f4 certify", to_json(sys, c), t.str(), status);
  return exit_code(status);
}

int cmd_f4_prop42(const RunConfig& cfg, std::ostream& out) {
  RootSystem sys = system_of(cfg, "f4");
  require_system(sys, SystemKind::f4(), "f4 prop42");
  ReferenceData data = load_data(cfg, sys);
  Prop42Report r = verify_prop42_list(sys, data);
  std::ostringstream t;
  for (const auto& x : r.rows)
    if (!x.literal)
      t << "D" << x.entry.placement << " beta_" << x.entry.beta0 << " alpha_" << x.entry.alpha0
        << ": fails (weaker reading " << (x.weak ? "holds" : "fails") << ")\n";
  t << "passed " << r.passed << "/" << r.rows.size() << "\n";
  emit(out, cfg, "f4 prop42", to_json(sys, r), t.str(), r.status());
  return exit_code(r.status());
}

// --- selftest

int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
  json checks = json::array();
  std::ostringstream t;
  Status status = Status::Pass;
  auto add = [&](const std::string& name, Status s, const std::string& detail) {
    checks.push_back({{"check", name}, {"status", status_name(s)}, {"detail", detail}});
    t << status_name(s) << "  " << name << (detail.empty() ? "" : "  " + detail) << "\n";
    status = worst(status, s);
  };

  RootSystem g2(SystemKind::g2());
  StructureTable tg2(g2);
  auto jv = tg2.jacobi_violations();
  add("G2 Jacobi", jv.empty() ? Status::Pass : Status::Fail, std::to_string(jv.size()) + " violations");

  TypeA a(4);
  StructureTable ta(a.system());
  std::vector<int> signs = matrix_unit_signs(a, ta);
  int bad = 0, total = 0;
  for (const auto& d : enumerate_rook_placements(a.system())) {
    XiMap xi = random_xi(d, derive_seed(cfg.seed, static_cast<std::uint64_t>(total)));
    for (const LinearForm& f : orbit_samples(ta, d, xi, 3, derive_seed(cfg.seed, 1000 + total))) {
      Decomposition dec = decompose(a, to_matrix_form(a, signs, f));
      XiMap back;
      for (const auto& [r, v] : dec.xi) back[r] = v * Rational(signs[r]);
      if (!(dec.placement.same_set(d) && back == xi)) ++bad;
    }
    ++total;
  }
  add("A(3) partition", bad == 0 ? Status::Pass : Status::Fail,
      std::to_string(total) + " placements, " + std::to_string(bad) + " mismatches");

  RootSystem f4(SystemKind::f4());
  try {
    ReferenceData data = load_data(cfg, f4);
    TableReport r = verify_prop44_table(f4, data, 17);
    bool ok = r.rows.size() == 1 && r.rows.front().match && r.uniqueness;
    add("table row 17", ok ? Status::Pass : Status::Fail, "tuple (" + join(r.rows.front().printed_tuple) + ")");
  } catch (const DataError& e) {
    add("table row 17", Status::Fail, e.what());
  }
  emit(out, cfg, "selftest", {{"checks", checks}}, t.str(), status);
  return exit_code(status);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rook placements, coadjoint orbits and their certificates", "rook-orbits"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--system", cfg.system, "g2, f4 or aN (type A of rank N)");
  app.add_option("--seed", cfg.seed, "master seed")->capture_default_str();
  app.add_option("--samples", cfg.samples, "samples per check")->capture_default_str();
  app.add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  auto* data_opt = app.add_option("--data", cfg.data_file, "reference data file (env ROOK_ORBITS_DATA)");

  auto* roots = app.add_subcommand("roots", "list positive roots");

  auto* rooks = app.add_subcommand("rooks", "enumerate rook placements");
  std::string filter = "all";
  bool maximal = false, list = false;
  rooks->add_option("--filter", filter, "all, nonsingular, orthogonal, orthogonal-nonsingular")->capture_default_str();
  rooks->add_flag("--maximal", maximal, "only inclusion-maximal members");
  rooks->add_flag("--list", list, "print every placement");

  auto* andre = app.add_subcommand("andre", "type A supercharacter tools");
  andre->require_subcommand(1);
  int n = 4;
  std::string form, placement, xi;
  auto* decomp = andre->add_subcommand("decompose", "find (D, xi) with lambda in its basic subvariety");
  decomp->add_option("--n", n, "matrix size")->required();
  decomp->add_option("--form", form, "nested matrix JSON or @file")->required();
  auto* member = andre->add_subcommand("membership", "test lambda against (D, xi)");
  member->add_option("--n", n, "matrix size")->required();
  member->add_option("--placement", placement, "[[i,j],...]")->required();
  member->add_option("--xi", xi, "[\"p/q\",...]")->required();
  member->add_option("--form", form, "nested matrix JSON or @file")->required();

  auto* g2 = app.add_subcommand("g2", "G2 orbit verification");
  g2->require_subcommand(1);
  int which = 0;
  bool all = false;
  auto* verify = g2->add_subcommand("verify", "sample every case against its equations");
  auto* case_opt = verify->add_option("--case", which, "case 1..12");
  auto* all_flag = verify->add_flag("--all", all, "all 12 cases");
  case_opt->excludes(all_flag);
  auto* g2c = g2->add_subcommand("classify", "classify a form");
  g2c->add_option("--form", form, "{\"coeffs\": {...}} or @file")->required();
  auto* dims = g2->add_subcommand("dims", "dimension signals per case");

  auto* f4 = app.add_subcommand("f4", "F4 distinctness certificates");
  f4->require_subcommand(1);
  auto* f4max = f4->add_subcommand("maximal", "compare maximal placements with the printed list");
  int row = 0;
  auto* f4table = f4->add_subcommand("table", "recompute the minor-tuple table");
  f4table->add_option("--row", row, "row 1..24 (default all)");
  auto* f4cert = f4->add_subcommand("certify", "build distinctness certificates");
  f4cert->add_flag("--all", all, "every orthogonal non-singular placement");
  f4cert->add_option("--placement", placement, "[\"c1,c2,c3,c4\",...] or a name like D26");
  auto* f4p42 = f4->add_subcommand("prop42", "check the printed pairing-criterion list");

  auto* selftest = app.add_subcommand("selftest", "fast invariant suite");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n" << app.help();
    return 2;
  }
  cfg.data_given = data_opt->count() > 0;

  try {
    if (*roots) return cmd_roots(cfg, out);
    if (*rooks) return cmd_rooks(cfg, filter, maximal, list, out);
    if (*decomp) return cmd_andre_decompose(cfg, n, form, out);
    if (*member) return cmd_andre_membership(cfg, n, placement, xi, form, out);
    if (*verify) {
      if (!all && which == 0) throw UsageError("g2 verify needs --case K or --all");
      if (which < 0 || which > kG2Cases) throw UsageError("--case must be in 1..12");
      return cmd_g2_verify(cfg, all ? 0 : which, out);
    }
    if (*g2c) return cmd_g2_classify(cfg, form, out);
    if (*dims) return cmd_g2_dims(cfg, out);
    if (*f4max) return cmd_f4_maximal(cfg, out);
    if (*f4table) return cmd_f4_table(cfg, row, out);
    if (*f4cert) return cmd_f4_certify(cfg, all, placement, out);
    if (*f4p42) return cmd_f4_prop42(cfg, out);
    if (*selftest) return cmd_selftest(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InconsistencyError& e) {
    err << "inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << app.help();
  return 2;
}

}  // namespace rook_orbits::cli
