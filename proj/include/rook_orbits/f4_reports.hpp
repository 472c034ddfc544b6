#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rook_orbits/f4_certify.hpp"
#include "rook_orbits/reference_data.hpp"

namespace rook_orbits {

enum class Status { Pass, Flag, Fail, Skip };
std::string status_name(Status s);
Status worst(Status a, Status b);

struct PrintedMinorCheck {
  std::vector<int> rows;
  std::vector<int> cols;
  Rational printed;
  Rational computed;
  bool abs_agree() const { return abs(printed) == abs(computed); }
};

struct TableRowReport {
  int row = 0;
  std::vector<int> roots;
  std::vector<int> printed_order;  // 1-based, literal
  bool order_is_permutation = true;
  std::vector<int> order_used;  // 1-based; the completion when the literal order is invalid
  bool is_rook_placement = true;
  std::vector<int> printed_tuple;
  std::vector<std::vector<int>> solutions;
  std::vector<MinorCheck> checks;  // conditions evaluated at the printed tuple
  std::vector<PrintedMinorCheck> printed_minors;
  bool match = false;
  bool unique = true;
  Status status = Status::Pass;
  std::string note;
};

struct TableReport {
  std::vector<TableRowReport> rows;
  int matches = 0;
  bool uniqueness = true;
  bool row16_flagged = false;
  Status status() const;
};

// row = 0 checks every row.
TableReport verify_prop44_table(const RootSystem& sys, const ReferenceData& data, int row = 0);

struct MaximalReport {
  int maximal_all = 0;         // inclusion-maximal rook placements
  int maximal_orthogonal = 0;  // inclusion-maximal orthogonal rook placements
  int printed_count = 0;
  std::vector<std::string> missing;  // computed but not printed
  std::vector<std::string> extra;    // printed but not computed
  std::vector<std::string> not_rook;
  bool beta1_maximal = true;
  std::vector<int> second_root_maximal;   // D_i with beta_2 <=-maximal
  std::vector<int> two_maximal_members;   // D_i with at least two <=-maximal members
  std::vector<int> printed_second_root;
  bool sets_equal() const { return missing.empty() && extra.empty(); }
  bool second_root_matches() const { return second_root_maximal == printed_second_root; }
  Status status() const;
};

MaximalReport verify_maximal_list(const RootSystem& sys, const ReferenceData& data);

struct Prop42Row {
  Prop42Entry entry;
  bool literal = false;   // beta not < beta_0 must be orthogonal to alpha_0
  bool weak = false;      // only beta > beta_0 must be orthogonal to alpha_0
  std::vector<int> witnesses;  // roots violating the literal reading
};

struct Prop42Report {
  std::vector<Prop42Row> rows;
  int passed = 0;
  Status status() const { return passed == static_cast<int>(rows.size()) ? Status::Pass : Status::Fail; }
};

Prop42Report verify_prop42_list(const RootSystem& sys, const ReferenceData& data);

struct ExtraRow {
  std::string name;
  Certificate certificate;
  std::vector<int> named_roots;  // roots assigned to the submaximal-root lemma
  bool tools_match = false;     // named roots justified by that lemma
};

struct ExtraReport {
  std::vector<ExtraRow> rows;
  Status status() const;
};

ExtraReport verify_extra_placements(const RootSystem& sys, const ReferenceData& data);

}  // namespace rook_orbits
