#pragma once

#include <json.hpp>

#include "rook_orbits/andre.hpp"
#include "rook_orbits/f4_reports.hpp"
#include "rook_orbits/g2_orbits.hpp"

namespace rook_orbits {

using nlohmann::json;

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json roots_to_json(const RootSystem& sys, const std::vector<int>& roots);
json xi_to_json(const RootSystem& sys, const XiMap& xi);

// {"coeffs": {"<root>": "p/q", ...}}; zero coefficients are omitted.
json form_to_json(const RootSystem& sys, const LinearForm& f);
LinearForm form_from_json(const RootSystem& sys, const json& j);

// Row-major nested array of "p/q"; a flat array of n*n entries is also accepted.
json matrix_form_to_json(const MatrixForm& m);
MatrixForm matrix_form_from_json(const json& j);
// {"D": [[i,j],...], "xi": ["p/q",...]}
json decomposition_to_json(const TypeA& a, const Decomposition& d);

json to_json(const RootSystem& sys, const CaseReport& r);
json to_json(const RootSystem& sys, const DimensionRow& r);
json to_json(const MinorCheck& c);
json to_json(const RootSystem& sys, const TableRowReport& r);
json to_json(const RootSystem& sys, const TableReport& r);
json to_json(const MaximalReport& r);
json to_json(const RootSystem& sys, const Prop42Report& r);
json to_json(const RootSystem& sys, const Certificate& c);
json to_json(const RootSystem& sys, const CertifyAllSummary& s);
json to_json(const RootSystem& sys, const ExtraReport& r);

}  // namespace rook_orbits
