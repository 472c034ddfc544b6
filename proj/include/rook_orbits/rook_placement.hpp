#pragma once

#include <string>
#include <vector>

#include "rook_orbits/root_system.hpp"

namespace rook_orbits {

// Ordered set of positive-root indices with pairwise non-positive inner products.
class RookPlacement {
 public:
  RookPlacement() = default;
  static RookPlacement make(const RootSystem& sys, std::vector<int> roots);
  static RookPlacement from_roots(const RootSystem& sys, const std::vector<Root>& roots);

  const std::vector<int>& roots() const { return roots_; }
  int size() const { return static_cast<int>(roots_.size()); }
  bool empty() const { return roots_.empty(); }
  bool contains(int idx) const;
  int operator[](int k) const { return roots_.at(k); }
  // Same set, canonical order.
  std::vector<int> sorted() const;
  bool same_set(const RookPlacement& other) const { return sorted() == other.sorted(); }
  std::string str(const RootSystem& sys) const;

  friend bool operator==(const RookPlacement&, const RookPlacement&) = default;

 private:
  std::vector<int> roots_;
};

enum class PlacementFilter { All, Nonsingular, Orthogonal, OrthogonalNonsingular };

PlacementFilter parse_filter(const std::string& text);
std::string filter_name(PlacementFilter f);

bool is_rook_placement(const RootSystem& sys, const std::vector<int>& roots);
bool is_nonsingular(const RootSystem& sys, const std::vector<int>& roots);
bool is_orthogonal(const RootSystem& sys, const std::vector<int>& roots);
bool passes_filter(const RootSystem& sys, const std::vector<int>& roots, PlacementFilter f);

std::vector<RookPlacement> enumerate_rook_placements(const RootSystem& sys, PlacementFilter f = PlacementFilter::All);

// Members of the filtered family not properly contained in another member.
std::vector<RookPlacement> maximal_rook_placements(const RootSystem& sys, PlacementFilter f = PlacementFilter::All);

// Members of D that are maximal for <= within D.
std::vector<int> maximal_members(const RootSystem& sys, const std::vector<int>& roots);

}  // namespace rook_orbits
