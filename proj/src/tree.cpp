#include "ultraball/tree.hpp"

#include <algorithm>
#include <functional>

namespace ub {

int LabeledTree::leaf_of(int point) const {
  for (int v = 0; v < node_count(); ++v)
    if (is_leaf(v) && nodes[v].members.size() == 1 &&
        nodes[v].members[0] == point)
      return v;
  throw Error("unknown-point", "no leaf for point index " +
                                   std::to_string(point));
}

RootedTree shape_of(const LabeledTree& t) {
  RootedTree r;
  r.children.resize(t.nodes.size());
  for (std::size_t v = 0; v < t.nodes.size(); ++v)
    r.children[v] = t.nodes[v].children;
  r.root = t.root;
  return r;
}

Partition diametrical_partition(const Space& space,
                                const std::vector<int>& subset) {
  space.require_ultrametric();
  if (subset.size() < 2)
    throw Error("partition-undefined",
                "diametrical partition needs at least two points");
  Rat d = diam(space, subset);
  int m = static_cast<int>(subset.size());
  // Components of the graph with edges where d(u,v) < diam: union-find.
  std::vector<int> rep(m);
  for (int i = 0; i < m; ++i) rep[i] = i;
  std::function<int(int)> find = [&](int i) {
    while (rep[i] != i) i = rep[i] = rep[rep[i]];
    return i;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (space.dist(subset[i], subset[j]) < d) rep[find(i)] = find(j);
  Partition p;
  std::vector<int> part_of(m, -1);
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return subset[a] < subset[b]; });
  for (int i : order) {
    int r = find(i);
    if (part_of[r] < 0) {
      part_of[r] = static_cast<int>(p.parts.size());
      p.parts.emplace_back();
    }
    p.parts[part_of[r]].push_back(subset[i]);
  }
  return p;
}

LabeledTree build_tree(const Space& space) {
  space.require_ultrametric();
  LabeledTree t;
  t.points = space.points();
  std::function<int(std::vector<int>, int)> grow =
      [&](std::vector<int> members, int parent) {
        int id = t.node_count();
        t.nodes.push_back({});
        t.nodes[id].parent = parent;
        t.nodes[id].label = diam(space, members);
        t.nodes[id].members = std::move(members);
        if (t.nodes[id].members.size() >= 2) {
          Partition p = diametrical_partition(space, t.nodes[id].members);
          for (auto& part : p.parts) {
            int c = grow(std::move(part), id);
            t.nodes[id].children.push_back(c);
          }
        }
        return id;
      };
  std::vector<int> all(space.size());
  for (int i = 0; i < space.size(); ++i) all[i] = i;
  t.root = grow(std::move(all), -1);
  return t;
}

namespace {

bool contains(const std::vector<int>& sorted, int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace

Rat tree_distance(const LabeledTree& tree, int x, int y) {
  int n = static_cast<int>(tree.points.size());
  if (x < 0 || x >= n || y < 0 || y >= n)
    throw Error("unknown-point", "point index out of range");
  if (x == y) return Rat(0);
  // Descend from the root while some child still holds both leaves; labels
  // strictly decrease, so the deepest common ancestor carries the max label
  // on the leaf-to-leaf path.
  int v = tree.root;
  for (;;) {
    int next = -1;
    for (int c : tree.nodes[v].children)
      if (contains(tree.nodes[c].members, x) &&
          contains(tree.nodes[c].members, y)) {
        next = c;
        break;
      }
    if (next < 0) return tree.nodes[v].label;
    v = next;
  }
}

TreeCheckReport check_tree(const LabeledTree& tree, int n) {
  if (!tree.labeled)
    throw Error("unlabeled-tree", "check requires a labeled tree");
  if (n < 0) throw Error("bad-parameter", "n must be nonnegative");
  TreeCheckReport rep;
  auto add = [&](int v, const char* rule, std::string detail) {
    rep.pass = false;
    rep.violations.push_back({v, rule, std::move(detail)});
  };
  for (int v = 0; v < tree.node_count(); ++v) {
    const TreeNode& node = tree.nodes[v];
    int deg = static_cast<int>(node.children.size());
    if (deg >= 1 && deg <= n + 1)
      add(v, "out-degree",
          "out-degree " + std::to_string(deg) + " is forbidden for n = " +
              std::to_string(n));
    if (deg == 0 && !node.label.is_zero())
      add(v, "leaf-label", "leaf labeled " + node.label.str());
    if (deg > 0 && node.label.is_zero())
      add(v, "zero-internal", "internal vertex labeled 0");
    int leaf_children = 0;
    for (int c : node.children) {
      if (tree.nodes[c].label >= node.label)
        add(c, "label-order", "child label " + tree.nodes[c].label.str() +
                                  " not below parent label " +
                                  node.label.str());
      if (tree.is_leaf(c)) ++leaf_children;
    }
    if (deg > 0 && leaf_children < n)
      add(v, "leaf-children",
          "internal vertex has " + std::to_string(leaf_children) +
              " leaf children, needs at least " + std::to_string(n));
  }
  return rep;
}

Space space_from_tree(const LabeledTree& tree) {
  TreeCheckReport rep = check_tree(tree, 0);
  if (!rep.pass) {
    const TreeCheckViolation& v = rep.violations.front();
    throw Error("not-representable",
                "tree is not a representing tree: " + v.detail +
                    " (vertex " + std::to_string(v.node) + ")",
                Error::Kind::domain, std::to_string(v.node));
  }
  int n = static_cast<int>(tree.points.size());
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
  // d(x,y) = label of the deepest vertex whose subtree holds both leaves:
  // at every internal vertex, pairs across distinct children get its label.
  std::function<std::vector<int>(int)> walk = [&](int v) {
    if (tree.is_leaf(v)) return std::vector<int>{tree.nodes[v].members};
    std::vector<std::vector<int>> groups;
    for (int c : tree.nodes[v].children) groups.push_back(walk(c));
    std::vector<int> all;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      for (std::size_t j = i + 1; j < groups.size(); ++j)
        for (int x : groups[i])
          for (int y : groups[j]) m[x][y] = m[y][x] = tree.nodes[v].label;
      all.insert(all.end(), groups[i].begin(), groups[i].end());
    }
    return all;
  };
  walk(tree.root);
  return Space(tree.points, std::move(m));
}

}  // namespace ub
