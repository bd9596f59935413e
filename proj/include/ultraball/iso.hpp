#pragma once

#include <string>

#include "ultraball/tree.hpp"

namespace ub {

// Order- and naming-invariant encodings of rooted trees. Two trees have
// equal encodings (in the matching mode) iff they are isomorphic in that
// mode; children are sorted lexicographically by encoding, labels are
// serialized as reduced fractions.
std::string canonical_form(const LabeledTree& tree, bool labeled);
std::string canonical_form(const RootedTree& tree);

// FNV-1a 64 hex digest of an encoding, for compact display.
std::string canon_digest(const std::string& encoding);

bool is_isomorphic(const LabeledTree& a, const LabeledTree& b, bool labeled);
bool is_isomorphic(const RootedTree& a, const RootedTree& b);

// Isometry of finite ultrametric spaces: labeled isomorphism of their
// representing trees.
bool is_isometric(const Space& a, const Space& b);

}  // namespace ub
