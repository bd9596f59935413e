#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ultraball/tree.hpp"

namespace ub {

// Random ultrametric spaces via random admissible labeled trees: every tree
// produced passes check_tree(t, 0), so space_from_tree realizes it exactly.
struct GenOptions {
  int leaves = 4;
  std::uint64_t seed = 0;
  // When nonempty: allowed internal labels; they are sorted descending and
  // assigned by depth, the tree depth adapts to the label count.
  std::vector<Rat> labels;
};

using Rng = std::mt19937_64;

// Bounded draw with plain modulo so the byte stream is identical across
// platforms (uniform_int_distribution is implementation-defined).
std::uint64_t rand_below(Rng& rng, std::uint64_t bound);

LabeledTree gen_tree(const GenOptions& opt, Rng& rng);
LabeledTree gen_tree(const GenOptions& opt);
Space gen_space(const GenOptions& opt);
Space gen_space(const GenOptions& opt, Rng& rng);

}  // namespace ub
