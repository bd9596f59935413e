#pragma once

// Shared fixtures and independent brute-force oracles for the test suites.
// Oracles here go straight from the definitions and never reuse the code
// paths they are checking.

#include <algorithm>
#include <set>
#include <vector>

#include "ultraball/ballean.hpp"
#include "ultraball/gen.hpp"
#include "ultraball/space.hpp"
#include "ultraball/tree.hpp"

namespace helpers {

using ub::Rat;

inline ub::Space make_space(std::vector<std::string> points,
                            std::vector<std::vector<const char*>> matrix) {
  std::vector<std::vector<Rat>> m;
  for (auto& row : matrix) {
    std::vector<Rat> r;
    for (const char* cell : row) r.push_back(Rat::parse(cell));
    m.push_back(std::move(r));
  }
  return ub::Space(std::move(points), std::move(m));
}

// The 4-point space with diam 2 and inner distances 1: two antipodal pairs.
inline ub::Space twin_pairs() {
  return make_space({"x1", "x2", "x3", "x4"}, {{"0", "2", "1", "2"},
                                               {"2", "0", "2", "1"},
                                               {"1", "2", "0", "2"},
                                               {"2", "1", "2", "0"}});
}

inline ub::Space equilateral(int n, const char* c = "1") {
  std::vector<std::string> points;
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat::parse(c)));
  for (int i = 0; i < n; ++i) {
    points.push_back("e" + std::to_string(i + 1));
    m[i][i] = Rat(0);
  }
  return ub::Space(std::move(points), std::move(m));
}

// All balls by definition: scan every (center, radius) with radius drawn
// from {0} union realized distances. Works on any metric space.
inline std::set<std::vector<int>> brute_balls(const ub::Space& s) {
  std::set<Rat> radii{Rat(0)};
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < s.size(); ++j) radii.insert(s.dist(i, j));
  std::set<std::vector<int>> out;
  for (int c = 0; c < s.size(); ++c)
    for (const Rat& r : radii) {
      std::vector<int> members;
      for (int x = 0; x < s.size(); ++x)
        if (s.dist(x, c) <= r) members.push_back(x);
      out.insert(std::move(members));
    }
  return out;
}

// Definitional Hausdorff distance, written independently of the library.
inline Rat brute_hausdorff(const ub::Space& s, const std::vector<int>& a,
                           const std::vector<int>& b) {
  Rat result = 0;
  for (int p : a) {
    Rat best = s.dist(p, b.front());
    for (int q : b) best = std::min(best, s.dist(p, q));
    result = std::max(result, best);
  }
  for (int q : b) {
    Rat best = s.dist(q, a.front());
    for (int p : a) best = std::min(best, s.dist(p, q));
    result = std::max(result, best);
  }
  return result;
}

// Root-preserving bijection search. `label_of(v)` must agree between
// isomorphic vertices; pass a constant for unlabeled mode.
template <typename KidsA, typename KidsB, typename LabelEq>
bool brute_iso_rec(int a, int b, const KidsA& kids_a, const KidsB& kids_b,
                   const LabelEq& label_eq) {
  if (!label_eq(a, b)) return false;
  std::vector<int> ka = kids_a(a);
  std::vector<int> kb = kids_b(b);
  if (ka.size() != kb.size()) return false;
  std::sort(kb.begin(), kb.end());
  do {
    bool ok = true;
    for (std::size_t i = 0; i < ka.size() && ok; ++i)
      ok = brute_iso_rec(ka[i], kb[i], kids_a, kids_b, label_eq);
    if (ok) return true;
  } while (std::next_permutation(kb.begin(), kb.end()));
  return false;
}

inline bool brute_tree_iso(const ub::LabeledTree& a, const ub::LabeledTree& b,
                           bool labeled) {
  auto kids_a = [&](int v) { return a.nodes[v].children; };
  auto kids_b = [&](int v) { return b.nodes[v].children; };
  auto label_eq = [&](int va, int vb) {
    return !labeled || a.nodes[va].label == b.nodes[vb].label;
  };
  return brute_iso_rec(a.root, b.root, kids_a, kids_b, label_eq);
}

inline bool brute_rooted_iso(const ub::RootedTree& a, const ub::RootedTree& b) {
  auto kids_a = [&](int v) { return a.children[v]; };
  auto kids_b = [&](int v) { return b.children[v]; };
  auto label_eq = [](int, int) { return true; };
  return brute_iso_rec(a.root, b.root, kids_a, kids_b, label_eq);
}

// Exhaustive isometry search over all point bijections.
inline bool brute_isometric(const ub::Space& a, const ub::Space& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> perm(a.size());
  for (int i = 0; i < a.size(); ++i) perm[i] = i;
  do {
    bool ok = true;
    for (int i = 0; i < a.size() && ok; ++i)
      for (int j = i + 1; j < a.size() && ok; ++j)
        ok = a.dist(i, j) == b.dist(perm[i], perm[j]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Random point permutation of a space (isometric copy, fresh names optional).
inline ub::Space permuted_copy(const ub::Space& s, ub::Rng& rng,
                               bool rename = false) {
  std::vector<int> perm(s.size());
  for (int i = 0; i < s.size(); ++i) perm[i] = i;
  for (int i = s.size() - 1; i > 0; --i)
    std::swap(perm[i],
              perm[ub::rand_below(rng, static_cast<std::uint64_t>(i + 1))]);
  std::vector<std::string> points(s.size());
  std::vector<std::vector<Rat>> m(s.size(), std::vector<Rat>(s.size()));
  for (int i = 0; i < s.size(); ++i) {
    points[i] = rename ? "q" + std::to_string(i + 1) : s.point(perm[i]);
    for (int j = 0; j < s.size(); ++j) m[i][j] = s.dist(perm[i], perm[j]);
  }
  return ub::Space(std::move(points), std::move(m));
}

// Random metric (usually not ultrametric): distances in [5, 9] always
// satisfy the triangle inequality.
inline ub::Space random_metric(int n, ub::Rng& rng) {
  std::vector<std::string> points;
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) points.push_back("m" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      m[i][j] = m[j][i] = Rat(5 + (long long)ub::rand_below(rng, 5));
  return ub::Space(std::move(points), std::move(m));
}

// Arbitrary random rooted tree (unary chains allowed) for canonical-form
// soundness checks.
inline ub::RootedTree random_rooted_tree(int vertices, ub::Rng& rng) {
  ub::RootedTree t;
  t.children.resize(vertices);
  t.root = 0;
  for (int v = 1; v < vertices; ++v) {
    int parent = static_cast<int>(ub::rand_below(rng, v));
    t.children[parent].push_back(v);
  }
  return t;
}

inline std::vector<int> all_points(const ub::Space& s) {
  std::vector<int> out(s.size());
  for (int i = 0; i < s.size(); ++i) out[i] = i;
  return out;
}

}  // namespace helpers
