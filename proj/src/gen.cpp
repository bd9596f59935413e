#include "ultraball/gen.hpp"

#include <algorithm>
#include <functional>

namespace ub {

std::uint64_t rand_below(Rng& rng, std::uint64_t bound) {
  return bound <= 1 ? 0 : rng() % bound;
}

namespace {

// Shape first: recursively split m leaves into k >= 2 nonempty groups.
// depth_cap limits how deep internal vertices may sit (for fixed label sets).
struct ShapeNode {
  int leaves;
  std::vector<int> kids;
};

int grow_shape(std::vector<ShapeNode>& nodes, int m, int depth, int depth_cap,
               Rng& rng) {
  int id = static_cast<int>(nodes.size());
  nodes.push_back({m, {}});
  if (m == 1) return id;
  int k = depth + 1 >= depth_cap
              ? m
              : 2 + static_cast<int>(
                        rand_below(rng, static_cast<std::uint64_t>(m - 1)));
  // Random composition of m into k positive parts.
  std::vector<int> sizes(k, 1);
  for (int extra = 0; extra < m - k; ++extra)
    ++sizes[rand_below(rng, static_cast<std::uint64_t>(k))];
  std::vector<int> kids;
  for (int s : sizes) kids.push_back(grow_shape(nodes, s, depth + 1, depth_cap, rng));
  nodes[id].kids = std::move(kids);
  return id;
}

// Label headroom: 0 for leaves, 1 + max over children otherwise. An internal
// vertex with integer label need(v) can always label its subtree with a
// strictly decreasing chain down to the leaves.
int need(const std::vector<ShapeNode>& nodes, int v, std::vector<int>& memo) {
  if (memo[v] >= 0) return memo[v];
  int best = 0;
  for (int c : nodes[v].kids) best = std::max(best, need(nodes, c, memo) + 1);
  return memo[v] = best;
}

}  // namespace

LabeledTree gen_tree(const GenOptions& opt, Rng& rng) {
  if (opt.leaves < 1)
    throw Error("bad-parameter", "leaf count must be positive");
  std::vector<Rat> labels = opt.labels;
  for (const Rat& l : labels)
    if (l <= Rat(0)) throw Error("bad-parameter", "labels must be positive");
  std::sort(labels.begin(), labels.end(),
            [](const Rat& a, const Rat& b) { return b < a; });
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  int depth_cap = labels.empty() ? opt.leaves : static_cast<int>(labels.size());
  std::vector<ShapeNode> shape;
  grow_shape(shape, opt.leaves, 0, depth_cap, rng);

  LabeledTree t;
  t.points.resize(opt.leaves);
  t.nodes.resize(shape.size());
  t.root = 0;

  std::vector<int> memo(static_cast<int>(shape.size()), -1);
  long long root_label =
      need(shape, 0, memo) + 1 + static_cast<long long>(rand_below(rng, 3));
  long long denom = 1 + static_cast<long long>(rand_below(rng, 3));

  int next_point = 0;
  // parent_int is the integer (pre-division) label of the parent.
  std::function<void(int, int, long long, int)> fill =
      [&](int v, int parent, long long parent_int, int depth) {
        t.nodes[v].parent = parent;
        t.nodes[v].children = shape[v].kids;
        if (shape[v].kids.empty()) {
          int p = next_point++;
          t.points[p] = "p" + std::to_string(p + 1);
          t.nodes[v].members = {p};
          t.nodes[v].label = Rat(0);
          return;
        }
        long long lbl = 0;
        if (!labels.empty()) {
          t.nodes[v].label = labels[depth];
        } else if (parent < 0) {
          lbl = root_label;
          t.nodes[v].label = Rat(lbl) / denom;
        } else {
          long long lo = need(shape, v, memo);
          long long hi = parent_int - 1;
          lbl = lo + static_cast<long long>(rand_below(
                         rng, static_cast<std::uint64_t>(hi - lo + 1)));
          t.nodes[v].label = Rat(lbl) / denom;
        }
        for (int c : shape[v].kids) fill(c, v, lbl, depth + 1);
      };
  fill(t.root, -1, 0, 0);

  std::function<void(int)> members = [&](int v) {
    if (t.is_leaf(v)) return;
    for (int c : t.nodes[v].children) {
      members(c);
      t.nodes[v].members.insert(t.nodes[v].members.end(),
                                t.nodes[c].members.begin(),
                                t.nodes[c].members.end());
    }
    std::sort(t.nodes[v].members.begin(), t.nodes[v].members.end());
  };
  members(t.root);
  return t;
}

LabeledTree gen_tree(const GenOptions& opt) {
  Rng rng(opt.seed);
  return gen_tree(opt, rng);
}

Space gen_space(const GenOptions& opt, Rng& rng) {
  return space_from_tree(gen_tree(opt, rng));
}

Space gen_space(const GenOptions& opt) {
  Rng rng(opt.seed);
  return gen_space(opt, rng);
}

}  // namespace ub
