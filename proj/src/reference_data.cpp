#include "rook_orbits/reference_data.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rook_orbits {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DataError(std::string("reference data: missing field '") + key + "'");
  return j.at(key);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw DataError(std::string("reference data: ") + what + " is not an integer");
  return j.get<int>();
}

std::vector<int> int_list(const json& j, const char* what, int lo, int hi) {
  if (!j.is_array()) throw DataError(std::string("reference data: ") + what + " is not a list");
  std::vector<int> out;
  for (const json& x : j) {
    int v = as_int(x, what);
    if (v < lo || v > hi) throw DataError(std::string("reference data: ") + what + " entry out of range");
    out.push_back(v);
  }
  return out;
}

std::vector<int> root_list(const json& j, const RootSystem& sys) {
  if (!j.is_array() || j.empty()) throw DataError("reference data: root list is empty or not a list");
  std::vector<int> out;
  for (const json& x : j) {
    if (!x.is_string()) throw DataError("reference data: root is not a string");
    std::optional<int> idx;
    try {
      idx = sys.parse_root(x.get<std::string>());
    } catch (const std::exception&) {
    }
    if (!idx) throw DataError("reference data: '" + x.get<std::string>() + "' is not a positive root");
    out.push_back(*idx);
  }
  return out;
}

std::vector<NamedPlacement> placements(const json& j, const RootSystem& sys, size_t count, int first) {
  if (!j.is_array() || j.size() != count) throw DataError("reference data: wrong number of placements");
  std::vector<NamedPlacement> out;
  for (const json& x : j) {
    NamedPlacement p;
    p.name = field(x, "name").get<std::string>();
    if (p.name != "D" + std::to_string(first + out.size())) throw DataError("reference data: placement out of order");
    p.roots = root_list(field(x, "roots"), sys);
    if (x.contains("lemma41_roots"))
      p.lemma41_roots = int_list(x.at("lemma41_roots"), "lemma41_roots", 1, static_cast<int>(p.roots.size()));
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

const NamedPlacement& ReferenceData::placement(int i) const {
  const int m = static_cast<int>(maximal.size());
  if (i >= 1 && i <= m) return maximal[i - 1];
  if (i > m && i <= m + static_cast<int>(extra.size())) return extra[i - m - 1];
  throw std::out_of_range("no placement D" + std::to_string(i));
}

ReferenceData parse_reference_data(const std::string& text, const RootSystem& f4) {
  if (f4.kind() != SystemKind::f4()) throw std::invalid_argument("reference data refers to F4");
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DataError(std::string("reference data: ") + e.what());
  }
  try {
    if (as_int(field(j, "schema"), "schema") != 1) throw DataError("reference data: unsupported schema");
    if (field(j, "system") != "F4") throw DataError("reference data: system is not F4");
    ReferenceData d;
    d.version = as_int(field(j, "version"), "version");
    d.maximal = placements(field(j, "maximal_placements"), f4, 24, 1);
    d.extra = placements(field(j, "extra_placements"), f4, 8, 25);
    d.second_root_maximal = int_list(field(j, "second_root_maximal"), "second_root_maximal", 1, 24);

    const json& table = field(j, "table");
    if (!table.is_array() || table.size() != 24) throw DataError("reference data: table needs 24 rows");
    for (const json& r : table) {
      TableRowData row;
      row.row = as_int(field(r, "row"), "row");
      if (row.row != static_cast<int>(d.table.size()) + 1) throw DataError("reference data: table rows out of order");
      row.roots = root_list(field(r, "roots"), f4);
      row.simple_order = int_list(field(r, "simple_order"), "simple_order", 1, 4);
      row.i_tuple = int_list(field(r, "i_tuple"), "i_tuple", 1, 4);
      if (row.simple_order.size() != 4 || row.i_tuple.size() != row.roots.size())
        throw DataError("reference data: table row " + std::to_string(row.row) + " has inconsistent sizes");
      d.table.push_back(std::move(row));
    }

    const json& p42 = field(j, "prop42_list");
    if (!p42.is_array() || p42.size() != 26) throw DataError("reference data: assignment list needs 26 entries");
    for (const json& e : p42) {
      Prop42Entry x{as_int(field(e, "placement"), "placement"), as_int(field(e, "beta0"), "beta0"),
                    as_int(field(e, "alpha0"), "alpha0")};
      if (x.placement < 1 || x.placement > 24 || x.alpha0 < 1 || x.alpha0 > 4 || x.beta0 < 1 ||
          x.beta0 > static_cast<int>(d.maximal[x.placement - 1].roots.size()))
        throw DataError("reference data: assignment entry out of range");
      d.prop42.push_back(x);
    }

    if (j.contains("printed_minors")) {
      for (const json& m : j.at("printed_minors")) {
        PrintedMinor pm;
        pm.row = as_int(field(m, "row"), "row");
        if (pm.row < 1 || pm.row > 24) throw DataError("reference data: printed minor row out of range");
        const int w = static_cast<int>(d.table[pm.row - 1].roots.size());
        pm.rows = int_list(field(m, "rows"), "rows", 1, 4);
        pm.cols = int_list(field(m, "cols"), "cols", 1, w);
        if (pm.rows.size() != pm.cols.size()) throw DataError("reference data: printed minor is not square");
        pm.value = Rational::parse(field(m, "value").get<std::string>());
        d.printed_minors.push_back(std::move(pm));
      }
    }
    return d;
  } catch (const json::exception& e) {
    throw DataError(std::string("reference data: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("reference data: ") + e.what());
  }
}

ReferenceData load_reference_data(const std::string& path, const RootSystem& f4) {
  std::ifstream in(path);
  if (!in) throw DataError("reference data: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  ReferenceData d = parse_reference_data(ss.str(), f4);
  d.path = path;
  return d;
}

std::string resolve_data_path(const std::optional<std::string>& flag, const std::string& fallback) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("ROOK_ORBITS_DATA"); env && *env) return env;
  return fallback;
}

}  // namespace rook_orbits
