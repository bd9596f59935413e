// Acceptance gate: one check per numbered criterion, each verified against
// independent brute-force oracles where a fast library routine is under
// test. Run with no arguments for all criteria, or with a number 1..11.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <map>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "ultraball/iso.hpp"
#include "ultraball/laminar.hpp"

using namespace helpers;
using ub::Rat;

namespace {

// Fixed-seed corpus: 200 random ultrametric spaces with 2 <= |X| <= 12.
std::vector<ub::Space>& corpus() {
  static std::vector<ub::Space> spaces = [] {
    std::vector<ub::Space> out;
    ub::Rng rng(20260823);
    for (int i = 0; i < 200; ++i) {
      ub::GenOptions opt;
      opt.leaves = 2 + i % 11;
      out.push_back(ub::gen_space(opt, rng));
    }
    return out;
  }();
  return spaces;
}

// Oracle for criterion 2: the largest label on the tree path between the
// vertices that carry the two balls.
Rat path_max_label(const ub::LabeledTree& t, const std::vector<int>& a,
                   const std::vector<int>& b) {
  std::map<std::vector<int>, int> where;
  for (int v = 0; v < t.node_count(); ++v) where[t.nodes[v].members] = v;
  int va = where.at(a);
  int vb = where.at(b);
  std::vector<int> up_a;
  for (int v = va; v >= 0; v = t.nodes[v].parent) up_a.push_back(v);
  Rat best = 0;
  for (int v = vb; v >= 0; v = t.nodes[v].parent) {
    auto hit = std::find(up_a.begin(), up_a.end(), v);
    if (hit != up_a.end()) {
      best = std::max(best, t.nodes[v].label);
      for (auto it = up_a.begin(); it != hit; ++it)
        best = std::max(best, t.nodes[*it].label);
      return best;
    }
    best = std::max(best, t.nodes[v].label);
  }
  std::abort();  // both vertices live in one tree
}

bool criterion1() {
  for (const ub::Space& s : corpus()) {
    std::set<std::vector<int>> fast;
    for (const ub::Ball& b : ub::enumerate_balls(s)) fast.insert(b.members);
    if (fast != brute_balls(s)) return false;
  }
  return true;
}

bool criterion2() {
  for (const ub::Space& s : corpus()) {
    std::vector<ub::Ball> balls = ub::enumerate_balls(s);
    ub::LabeledTree t = ub::build_tree(s);
    for (std::size_t i = 0; i < balls.size(); ++i)
      for (std::size_t j = i + 1; j < balls.size(); ++j) {
        Rat definitional =
            ub::hausdorff(s, balls[i].members, balls[j].members);
        Rat fast = ub::hausdorff_fast(s, balls[i], balls[j]);
        Rat tree = path_max_label(t, balls[i].members, balls[j].members);
        if (definitional != fast || fast != tree) return false;
      }
  }
  return true;
}

bool criterion3() {
  for (const ub::Space& s : corpus()) {
    if (s.size() > 8) continue;
    std::vector<ub::Ball> balls = ub::enumerate_balls(s);
    for (const ub::Ball& a : balls)
      for (const ub::Ball& b : balls)
        for (const ub::Ball& c : balls) {
          Rat ab = ub::hausdorff(s, a.members, b.members);
          Rat ac = ub::hausdorff(s, a.members, c.members);
          Rat cb = ub::hausdorff(s, c.members, b.members);
          if (ab > std::max(ac, cb)) return false;
        }
  }
  return true;
}

bool criterion4() {
  ub::Rng rng(4001);
  for (int i = 0; i < 100; ++i) {
    ub::GenOptions opt;
    opt.leaves = 1 + i % 10;
    ub::Space s = ub::gen_space(opt, rng);
    std::string transformed =
        ub::canonical_form(ub::add_leaf_transform(ub::build_tree(s)));
    std::string rebuilt = ub::canonical_form(
        ub::shape_of(ub::build_tree(ub::iterate_ballean(s, 1))));
    if (transformed != rebuilt) return false;
  }
  return true;
}

bool criterion5() {
  ub::Space s = twin_pairs();
  const int sizes[4] = {4, 7, 10, 13};
  for (int n = 0; n <= 3; ++n) {
    ub::Space it = ub::iterate_ballean(s, n);
    if (it.size() != sizes[n]) return false;
    ub::LabeledTree t = ub::build_tree(it);
    for (int v = 0; v < t.node_count(); ++v)
      if (!t.is_leaf(v) &&
          t.nodes[v].children.size() != static_cast<std::size_t>(n + 2))
        return false;
  }
  return true;
}

bool criterion6() {
  for (const ub::Space& s : corpus())
    for (int n = 0; n <= 3; ++n)
      if (!ub::check_tree(ub::build_tree(ub::iterate_ballean(s, n)), n).pass)
        return false;
  return true;
}

bool criterion7() {
  for (const ub::Space& s : corpus()) {
    if (s.size() < 2) continue;
    if (!ub::ballean_diametrical_check(s).pass) return false;
  }
  return true;
}

bool criterion8() {
  for (const ub::Space& s : corpus())
    if (!ub::validate_family(ub::family_of(s)).is_ballean) return false;
  ub::Rng rng(8001);
  for (int i = 0; i < 200; ++i) {
    ub::GenOptions opt;
    opt.leaves = 1 + i % 12;
    ub::LabeledTree t = ub::gen_tree(opt, rng);
    std::vector<std::vector<int>> members;
    for (int v = 0; v < t.node_count(); ++v) members.push_back(t.nodes[v].members);
    ub::SetFamily f(t.points, members);
    if (!ub::validate_family(f).is_ballean) return false;
    ub::Space rec = ub::reconstruct(f);
    if (!rec.is_ultrametric()) return false;
    if (!ub::same_family(ub::family_of(rec), f)) return false;
  }
  return true;
}

// Shift one internal label to the midpoint between itself and its largest
// child label: still a valid representing tree, different metric.
ub::Space perturbed_copy(const ub::Space& s, ub::Rng& rng) {
  ub::LabeledTree t = ub::build_tree(s);
  std::vector<int> internal;
  for (int v = 0; v < t.node_count(); ++v)
    if (!t.is_leaf(v)) internal.push_back(v);
  int v = internal[ub::rand_below(rng, internal.size())];
  Rat max_child = 0;
  for (int c : t.nodes[v].children)
    max_child = std::max(max_child, t.nodes[c].label);
  t.nodes[v].label = (t.nodes[v].label + max_child) / 2;
  return ub::space_from_tree(t);
}

bool criterion9() {
  ub::Rng rng(9001);
  for (int i = 0; i < 100; ++i) {
    ub::GenOptions opt;
    opt.leaves = 2 + i % 7;
    ub::Space a = ub::gen_space(opt, rng);
    ub::Space b =
        i % 2 == 0 ? permuted_copy(a, rng, true) : perturbed_copy(a, rng);
    if (ub::is_isometric(a, b) != brute_isometric(a, b)) return false;
  }
  return true;
}

bool criterion10() {
  for (const ub::Space& s : corpus()) {
    ub::LabeledTree t = ub::build_tree(s);
    if (!ub::same_space(ub::space_from_tree(t), s)) return false;
    for (int i = 0; i < s.size(); ++i)
      for (int j = 0; j < s.size(); ++j)
        if (ub::tree_distance(t, i, j) != s.dist(i, j)) return false;
  }
  ub::Rng rng(10001);
  for (int i = 0; i < 200; ++i) {
    ub::GenOptions opt;
    opt.leaves = 1 + i % 12;
    ub::LabeledTree t = ub::gen_tree(opt, rng);
    if (!ub::is_isomorphic(t, ub::build_tree(ub::space_from_tree(t)), true))
      return false;
  }
  return true;
}

bool criterion11() {
  ub::Rng rng(11001);
  for (int i = 0; i < 50; ++i) {
    ub::GenOptions opt;
    opt.leaves = 2 + i % 6;
    ub::Space a = ub::gen_space(opt, rng);
    ub::Space b =
        i % 2 == 0 ? permuted_copy(a, rng, true) : ub::gen_space(opt, rng);
    for (int n = 1; n <= 2; ++n) {
      bool iterated = ub::is_isometric(ub::iterate_ballean(a, n),
                                       ub::iterate_ballean(b, n));
      if (iterated && !ub::is_isometric(a, b)) return false;
    }
  }
  return true;
}

struct Criterion {
  int number;
  const char* summary;
  bool (*run)();
};

const Criterion kCriteria[] = {
    {1, "ball enumeration equals the definitional ball set", criterion1},
    {2, "Hausdorff distance: definition = shortcut = tree path", criterion2},
    {3, "Hausdorff metric satisfies the strong triangle inequality",
     criterion3},
    {4, "add-a-leaf transform matches the rebuilt ballean tree", criterion4},
    {5, "4-point fixture: sizes 4,7,10,13 and out-degrees n+2", criterion5},
    {6, "iterated trees pass the level-n realizability check", criterion6},
    {7, "ballean diametrical partition has the predicted parts", criterion7},
    {8, "family validation and exact reconstruction roundtrips", criterion8},
    {9, "isometry decision agrees with exhaustive bijection search",
     criterion9},
    {10, "space/tree roundtrips are exact up to isomorphism", criterion10},
    {11, "isometry of iterated balleans implies isometry of bases",
     criterion11},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 11) {
      std::fprintf(stderr, "usage: %s [criterion 1..11]\n", argv[0]);
      return 2;
    }
  }
  int failures = 0;
  for (const Criterion& c : kCriteria) {
    if (only && c.number != only) continue;
    bool ok = c.run();
    std::printf("criterion %2d: %s — %s\n", c.number, ok ? "PASS" : "FAIL",
                c.summary);
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
