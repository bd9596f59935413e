#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ultraball/rational.hpp"

namespace ub {

// Result of checking the (strong) triangle inequality over all triples.
// A witness (x, y, z) means d(x, y) exceeds the bound computed through z.
struct MetricReport {
  bool is_metric = false;
  bool is_ultrametric = false;
  std::optional<std::array<int, 3>> metric_witness;
  std::optional<std::array<int, 3>> ultra_witness;
};

// A nonempty subset of a space, identified by its sorted member-index set.
// Two balls are equal iff their member sets are equal; (center, radius)
// pairs are not canonical in ultrametric spaces.
struct Ball {
  std::vector<int> members;
  Rat diameter;

  friend bool operator==(const Ball& a, const Ball& b) {
    return a.members == b.members;
  }
  friend bool operator<(const Ball& a, const Ball& b) {
    return a.members < b.members;
  }
};

// A finite point set with an exact symmetric distance matrix. Immutable
// after construction; the metric/ultrametric report is computed eagerly.
class Space {
 public:
  Space(std::vector<std::string> points, std::vector<std::vector<Rat>> matrix);

  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& point(int i) const { return points_[i]; }
  int index_of(const std::string& name) const;  // throws "unknown-point"
  const Rat& dist(int i, int j) const { return matrix_[i][j]; }
  const std::vector<std::vector<Rat>>& matrix() const { return matrix_; }

  const MetricReport& report() const { return report_; }
  bool is_ultrametric() const { return report_.is_ultrametric; }
  void require_ultrametric() const;  // throws "not-ultrametric"

 private:
  std::vector<std::string> points_;
  std::vector<std::vector<Rat>> matrix_;
  MetricReport report_;
};

MetricReport validate(const Space& space);

// Maximum pairwise distance within `subset`; 0 for singletons.
Rat diam(const Space& space, const std::vector<int>& subset);

Ball closed_ball(const Space& space, int center, const Rat& radius);

// The smallest ball containing `subset`: B_{diam(subset)}(a) for any a.
Ball smallest_enclosing_ball(const Space& space, const std::vector<int>& subset);

// Point-name-keyed equality: same name set and same distance for every pair,
// regardless of point order.
bool same_space(const Space& a, const Space& b);

}  // namespace ub
