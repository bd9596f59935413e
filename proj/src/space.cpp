#include "ultraball/space.hpp"

#include <algorithm>
#include <unordered_set>

namespace ub {

namespace {

MetricReport compute_report(const std::vector<std::vector<Rat>>& m) {
  MetricReport rep;
  rep.is_metric = true;
  rep.is_ultrametric = true;
  int n = static_cast<int>(m.size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        const Rat& xy = m[x][y];
        const Rat& xz = m[x][z];
        const Rat& zy = m[z][y];
        if (rep.is_metric && xy > xz + zy) {
          rep.is_metric = false;
          rep.metric_witness = {x, y, z};
        }
        if (rep.is_ultrametric && xy > std::max(xz, zy)) {
          rep.is_ultrametric = false;
          rep.ultra_witness = {x, y, z};
        }
        if (!rep.is_metric && !rep.is_ultrametric) return rep;
      }
    }
  }
  return rep;
}

}  // namespace

Space::Space(std::vector<std::string> points,
             std::vector<std::vector<Rat>> matrix)
    : points_(std::move(points)), matrix_(std::move(matrix)) {
  int n = static_cast<int>(points_.size());
  if (n == 0) throw Error("empty-space", "a space needs at least one point");
  std::unordered_set<std::string> seen;
  for (const auto& p : points_)
    if (!seen.insert(p).second)
      throw Error("duplicate-point", "duplicate point identifier '" + p + "'");
  if (static_cast<int>(matrix_.size()) != n)
    throw Error("bad-matrix", "matrix row count does not match point count");
  for (const auto& row : matrix_)
    if (static_cast<int>(row.size()) != n)
      throw Error("bad-matrix", "matrix is not square");
  for (int i = 0; i < n; ++i) {
    if (!matrix_[i][i].is_zero())
      throw Error("nonzero-diagonal",
                  "d(" + points_[i] + "," + points_[i] + ") must be 0");
    for (int j = 0; j < n; ++j) {
      if (matrix_[i][j].negative())
        throw Error("negative-distance", "distances must be nonnegative");
      if (matrix_[i][j] != matrix_[j][i])
        throw Error("not-symmetric", "matrix must be symmetric at (" +
                                         points_[i] + "," + points_[j] + ")");
      if (i != j && matrix_[i][j].is_zero())
        throw Error("zero-distance", "distinct points " + points_[i] + " and " +
                                         points_[j] + " are at distance 0");
    }
  }
  report_ = compute_report(matrix_);
}

int Space::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (points_[i] == name) return i;
  throw Error("unknown-point", "unknown point '" + name + "'",
              Error::Kind::domain, "\"" + name + "\"");
}

void Space::require_ultrametric() const {
  if (!report_.is_ultrametric)
    throw Error("not-ultrametric",
                "operation requires an ultrametric space");
}

MetricReport validate(const Space& space) { return space.report(); }

Rat diam(const Space& space, const std::vector<int>& subset) {
  if (subset.empty()) throw Error("empty-subset", "diam of the empty set");
  Rat best = 0;
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i + 1; j < subset.size(); ++j)
      best = std::max(best, space.dist(subset[i], subset[j]));
  return best;
}

Ball closed_ball(const Space& space, int center, const Rat& radius) {
  space.require_ultrametric();
  if (center < 0 || center >= space.size())
    throw Error("unknown-point", "ball center index out of range");
  if (radius.negative())
    throw Error("negative-radius", "ball radius must be nonnegative");
  Ball b;
  for (int i = 0; i < space.size(); ++i)
    if (space.dist(i, center) <= radius) b.members.push_back(i);
  b.diameter = diam(space, b.members);
  return b;
}

Ball smallest_enclosing_ball(const Space& space,
                             const std::vector<int>& subset) {
  space.require_ultrametric();
  if (subset.empty())
    throw Error("empty-subset", "enclosing ball of the empty set");
  return closed_ball(space, subset.front(), diam(space, subset));
}

bool same_space(const Space& a, const Space& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> map(a.size());
  for (int i = 0; i < a.size(); ++i) {
    bool found = false;
    for (int j = 0; j < b.size(); ++j)
      if (a.point(i) == b.point(j)) {
        map[i] = j;
        found = true;
        break;
      }
    if (!found) return false;
  }
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (a.dist(i, j) != b.dist(map[i], map[j])) return false;
  return true;
}

}  // namespace ub
