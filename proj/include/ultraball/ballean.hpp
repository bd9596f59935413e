#pragma once

#include <string>
#include <vector>

#include "ultraball/tree.hpp"

namespace ub {

// The ballean of a space together with the Hausdorff ultrametric on it.
// hspace points are generated ball identifiers embedding the member list,
// so iterated spaces stay deterministic and collision-free.
struct BalleanSpace {
  Space base;
  std::vector<Ball> balls;       // canonical order (lexicographic members)
  std::vector<std::string> ids;  // ids[i] names balls[i] in hspace
  Space hspace;
};

// All balls of the space = vertex balls of T_X, canonically ordered.
std::vector<Ball> enumerate_balls(const Space& space);

std::string ball_id(const Space& space, const std::vector<int>& members);

// Eq-style Hausdorff distance between arbitrary nonempty subsets:
// max of the two directed max-min distances, evaluated exactly.
Rat hausdorff(const Space& space, const std::vector<int>& a,
              const std::vector<int>& b);

// For distinct balls of an ultrametric space the Hausdorff distance equals
// the diameter of the union; O(|union|) via the any-anchor diameter rule.
Rat hausdorff_fast(const Space& space, const Ball& a, const Ball& b);

BalleanSpace ballean_space(const Space& space);

// B^(0) = space, B^(n) = ballean of B^(n-1). Depth capped (default 6):
// each level grows the point set.
Space iterate_ballean(const Space& space, int n, int max_n = 6);

// One fresh leaf attached to every internal vertex; shape of T_{B_X}.
RootedTree add_leaf_transform(const LabeledTree& tree);

struct BalleanCheckReport {
  bool pass = false;
  int expected_parts = 0;
  int actual_parts = 0;
  // For each diametrical part of the hspace, the ball ids it contains.
  std::vector<std::vector<std::string>> parts;
};

// Verifies that the diametrical partition of (B_X, d_H) is {X} plus the
// balleans of the diametrical parts of X.
BalleanCheckReport ballean_diametrical_check(const Space& space);

}  // namespace ub
