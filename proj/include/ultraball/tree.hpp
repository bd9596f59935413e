#pragma once

#include <string>
#include <vector>

#include "ultraball/space.hpp"

namespace ub {

struct TreeNode {
  std::vector<int> members;   // sorted point indices of the node's ball
  Rat label;                  // the ball's diameter
  std::vector<int> children;  // node ids, canonical order
  int parent = -1;
};

// A labeled rooted tree over a set of named leaf points. For trees produced
// by build_tree the node balls are balls of the source space; for parsed
// trees the invariants are not assumed and must be checked via check_tree.
struct LabeledTree {
  std::vector<std::string> points;  // leaf names; index = point index
  std::vector<TreeNode> nodes;
  int root = 0;
  bool labeled = true;  // false for trees parsed without labels

  bool is_leaf(int v) const { return nodes[v].children.empty(); }
  int leaf_of(int point) const;  // node id of the singleton leaf {point}
  int node_count() const { return static_cast<int>(nodes.size()); }
};

// Shape-only rooted tree (no labels, no leaf names).
struct RootedTree {
  std::vector<std::vector<int>> children;
  int root = 0;

  bool is_leaf(int v) const { return children[v].empty(); }
};

RootedTree shape_of(const LabeledTree& t);

// The parts X_1,...,X_k of the diametrical graph G_{D,subset}: connected
// components of the graph on `subset` with edges where d < diam(subset).
// Parts are ordered by smallest contained point index, members sorted.
struct Partition {
  std::vector<std::vector<int>> parts;
};

Partition diametrical_partition(const Space& space,
                                const std::vector<int>& subset);

// The representing tree T_X: root = X labeled diam X, children are the
// diametrical-graph parts, recursively. Leaves are singletons labeled 0.
LabeledTree build_tree(const Space& space);

// Label of the deepest common ancestor of the leaves {x} and {y}; 0 for x=y.
Rat tree_distance(const LabeledTree& tree, int x, int y);

struct TreeCheckViolation {
  int node;
  std::string rule;    // "out-degree", "label-order", "leaf-label",
                       // "zero-internal", "leaf-children"
  std::string detail;
};

struct TreeCheckReport {
  bool pass = true;
  std::vector<TreeCheckViolation> violations;
};

// Checks, for the given n: out-degrees avoid {1,...,n+1}; labels strictly
// decrease parent->child with label 0 iff leaf; every internal vertex has
// at least n leaf children. n = 0 is exactly the representability condition.
TreeCheckReport check_tree(const LabeledTree& tree, int n);

// The ultrametric space on the tree's leaves with d(x,y) = label of the
// deepest common ancestor. Requires check_tree(tree, 0) to pass.
Space space_from_tree(const LabeledTree& tree);

}  // namespace ub
