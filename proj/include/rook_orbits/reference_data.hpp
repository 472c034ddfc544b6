#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rook_orbits/chevalley.hpp"
#include "rook_orbits/rational.hpp"
#include "rook_orbits/root_system.hpp"

namespace rook_orbits {

struct DataError : InconsistencyError {
  using InconsistencyError::InconsistencyError;
};

struct NamedPlacement {
  std::string name;
  std::vector<int> roots;          // positive-root indices, beta_1 first
  std::vector<int> lemma41_roots;  // 1-based positions
};

struct TableRowData {
  int row = 0;
  std::vector<int> roots;
  std::vector<int> simple_order;  // 1-based, as printed
  std::vector<int> i_tuple;
};

struct Prop42Entry {
  int placement = 0;  // D_i
  int beta0 = 0;      // 1-based position in D_i
  int alpha0 = 0;     // 1-based simple root
};

struct PrintedMinor {
  int row = 0;
  std::vector<int> rows;
  std::vector<int> cols;
  Rational value;
};

struct ReferenceData {
  int version = 0;
  std::string path;
  std::vector<NamedPlacement> maximal;  // D_1..D_24
  std::vector<int> second_root_maximal;
  std::vector<NamedPlacement> extra;  // D_25..D_32
  std::vector<TableRowData> table;
  std::vector<Prop42Entry> prop42;
  std::vector<PrintedMinor> printed_minors;

  // D_i for 1 <= i <= 32.
  const NamedPlacement& placement(int i) const;
};

// Throws DataError on malformed content.
ReferenceData parse_reference_data(const std::string& text, const RootSystem& f4);
ReferenceData load_reference_data(const std::string& path, const RootSystem& f4);

// --data, then ROOK_ORBITS_DATA, then the compiled-in default.
std::string resolve_data_path(const std::optional<std::string>& flag, const std::string& fallback);

}  // namespace rook_orbits
