#include "ultraball/ballean.hpp"

#include <algorithm>
#include <set>

namespace ub {

std::vector<Ball> enumerate_balls(const Space& space) {
  LabeledTree t = build_tree(space);
  std::vector<Ball> balls;
  balls.reserve(t.nodes.size());
  for (const TreeNode& node : t.nodes)
    balls.push_back({node.members, node.label});
  std::sort(balls.begin(), balls.end());
  return balls;
}

std::string ball_id(const Space& space, const std::vector<int>& members) {
  std::string id = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) id += ",";
    id += space.point(members[i]);
  }
  id += "}";
  return id;
}

Rat hausdorff(const Space& space, const std::vector<int>& a,
              const std::vector<int>& b) {
  if (a.empty() || b.empty())
    throw Error("empty-subset", "Hausdorff distance needs nonempty sets");
  auto directed = [&](const std::vector<int>& from, const std::vector<int>& to) {
    Rat worst = 0;
    for (int p : from) {
      Rat best = space.dist(p, to.front());
      for (int q : to) best = std::min(best, space.dist(p, q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

Rat hausdorff_fast(const Space& space, const Ball& a, const Ball& b) {
  space.require_ultrametric();
  if (a == b) throw Error("equal-balls", "Hausdorff shortcut needs distinct balls");
  auto is_ball = [&](const Ball& x) {
    if (x.members.empty()) return false;
    Ball probe = closed_ball(space, x.members.front(), diam(space, x.members));
    return probe.members == x.members;
  };
  if (!is_ball(a) || !is_ball(b))
    throw Error("not-a-ball", "arguments must be balls of the space");
  // diam(A) = max_x d(x, anchor) for any anchor in A (ultrametric).
  int anchor = a.members.front();
  Rat d = 0;
  for (int p : a.members) d = std::max(d, space.dist(p, anchor));
  for (int p : b.members) d = std::max(d, space.dist(p, anchor));
  return d;
}

BalleanSpace ballean_space(const Space& space) {
  space.require_ultrametric();
  std::vector<Ball> balls = enumerate_balls(space);
  int m = static_cast<int>(balls.size());
  std::vector<std::string> ids(m);
  for (int i = 0; i < m; ++i) ids[i] = ball_id(space, balls[i].members);
  std::vector<std::vector<Rat>> h(m, std::vector<Rat>(m, Rat(0)));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      h[i][j] = h[j][i] = hausdorff_fast(space, balls[i], balls[j]);
  Space hspace(ids, std::move(h));
  return BalleanSpace{space, std::move(balls), std::move(ids),
                      std::move(hspace)};
}

Space iterate_ballean(const Space& space, int n, int max_n) {
  space.require_ultrametric();
  if (n < 0) throw Error("bad-parameter", "iteration count must be nonnegative");
  if (n > max_n)
    throw Error("iteration-limit", "iteration depth " + std::to_string(n) +
                                       " exceeds the limit " +
                                       std::to_string(max_n));
  Space current = space;
  for (int i = 0; i < n; ++i) current = ballean_space(current).hspace;
  return current;
}

RootedTree add_leaf_transform(const LabeledTree& tree) {
  RootedTree r = shape_of(tree);
  int original = static_cast<int>(r.children.size());
  for (int v = 0; v < original; ++v)
    if (!r.children[v].empty()) {
      r.children[v].push_back(static_cast<int>(r.children.size()));
      r.children.emplace_back();
    }
  return r;
}

BalleanCheckReport ballean_diametrical_check(const Space& space) {
  space.require_ultrametric();
  if (space.size() < 2)
    throw Error("partition-undefined",
                "ballean diametrical check needs at least two points");
  BalleanSpace bs = ballean_space(space);
  std::vector<int> all(bs.hspace.size());
  for (int i = 0; i < bs.hspace.size(); ++i) all[i] = i;
  Partition actual = diametrical_partition(bs.hspace, all);

  // Expected parts: {X} plus, per diametrical part X_i of the base, the set
  // of balls contained in X_i.
  std::vector<int> base_all(space.size());
  for (int i = 0; i < space.size(); ++i) base_all[i] = i;
  Partition base_parts = diametrical_partition(space, base_all);
  std::set<std::set<int>> expected;
  std::set<int> whole;
  for (int i = 0; i < bs.hspace.size(); ++i)
    if (static_cast<int>(bs.balls[i].members.size()) == space.size())
      whole.insert(i);
  expected.insert(whole);
  for (const auto& part : base_parts.parts) {
    std::set<int> group;
    for (int i = 0; i < bs.hspace.size(); ++i)
      if (std::includes(part.begin(), part.end(), bs.balls[i].members.begin(),
                        bs.balls[i].members.end()))
        group.insert(i);
    expected.insert(group);
  }

  std::set<std::set<int>> got;
  BalleanCheckReport rep;
  for (const auto& part : actual.parts) {
    got.insert(std::set<int>(part.begin(), part.end()));
    std::vector<std::string> names;
    for (int i : part) names.push_back(bs.ids[i]);
    rep.parts.push_back(std::move(names));
  }
  rep.expected_parts = static_cast<int>(base_parts.parts.size()) + 1;
  rep.actual_parts = static_cast<int>(actual.parts.size());
  rep.pass = got == expected;
  return rep;
}

}  // namespace ub
