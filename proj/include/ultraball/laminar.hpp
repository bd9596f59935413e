#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ultraball/space.hpp"

namespace ub {

// A candidate family of subsets of a finite universe. Members are sorted
// index sets, stored in canonical (lexicographic) order, no duplicates.
struct SetFamily {
  std::vector<std::string> universe;
  std::vector<std::vector<int>> family;

  SetFamily(std::vector<std::string> universe,
            std::vector<std::vector<int>> family);
};

struct FamilyReport {
  bool is_ballean = false;
  std::vector<int> missing_singletons;  // point indices
  bool missing_universe = false;
  // First pair (in canonical order) that intersects without nesting.
  std::optional<std::pair<int, int>> crossing_pair;  // family indices
};

// is_ballean iff: universe in family, every singleton in family, and every
// intersecting pair of members is nested.
FamilyReport validate_family(const SetFamily& f);

// The ultrametric tau(x,y) = (size of the smallest member containing both)
// - 1, whose ballean is exactly the family. Requires a valid family.
Space reconstruct(const SetFamily& f);

// The family of all balls of an ultrametric space.
SetFamily family_of(const Space& space);

bool same_family(const SetFamily& a, const SetFamily& b);

}  // namespace ub
