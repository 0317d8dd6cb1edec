#pragma once

#include <vector>

#include "vq/space.hpp"

namespace vq {

// Finite point sequence; a single point is the trivial walk.
struct Walk {
  std::vector<int> points;
  explicit Walk(std::vector<int> pts) : points(std::move(pts)) {
    if (points.empty()) throw InputError("walk: must contain at least one point");
  }
  int start() const { return points.front(); }
  int end() const { return points.back(); }
  int steps() const { return int(points.size()) - 1; }
};

// Finite relation between positive radii and points.
struct AdmissionRelation {
  std::vector<std::pair<Elem, int>> pairs;
};

// R admits w: every consecutive step fits inside some ball prescribed at
// its source point.
bool admits(const TableSpace& s, const AdmissionRelation& r, const Walk& w);

template <class S>
S subspace(const S& s, const std::vector<int>& keep) {
  if (keep.empty()) throw InputError("subspace: empty point set");
  std::vector<std::string> pts;
  for (int i : keep) {
    if (i < 0 || i >= s.size()) throw InputError("subspace: point out of range");
    pts.push_back(s.points[i]);
  }
  std::vector<std::vector<typename S::Value>> d(keep.size());
  for (size_t a = 0; a < keep.size(); ++a)
    for (size_t b = 0; b < keep.size(); ++b) d[a].push_back(s.d(keep[a], keep[b]));
  if constexpr (std::is_same_v<S, TableSpace>)
    return TableSpace(s.quantale, std::move(pts), std::move(d));
  else
    return OmegaSpace(s.base, std::move(pts), std::move(d));
}

// Walk-based (co)limits of table-space factors. Distances land in Omega(U)
// for a construction-specific finite set U of radius maps; each distance is
// the down-closure of its good-set {R in U : R admits some walk between the
// two points}, hence principal, and U itself is never materialized. Balls
// of principal radii are per-R reachability sets, every ball contains the
// reachability set of the pointwise-minimal radius map, and that map is in
// U, so it alone decides the generated topology.
class WalkSpace {
 public:
  enum class Kind { Product, Sum, Quotient };

  // box products only differ for infinite index sets; the flag is recorded
  static WalkSpace product(std::vector<TableSpace> factors, bool box = false);
  static WalkSpace sum(std::vector<TableSpace> summands);
  // equiv maps source points onto class ids 0..k-1
  static WalkSpace quotient(TableSpace source, const std::vector<int>& equiv);

  Kind kind() const { return kind_; }
  bool box() const { return box_; }
  int size() const { return int(points_.size()); }
  const std::vector<std::string>& points() const { return points_; }
  const std::vector<TableSpace>& factors() const { return factors_; }

  // reachability under the pointwise-minimal radius map: the smallest ball
  PointMask minimal_ball(int x) const;
  // reachability under an explicit radius map; choice[p] indexes the
  // per-point radius options (0 is the minimal one)
  PointMask ball_of_radius_map(const std::vector<int>& choice, int x) const;
  int radius_choices(int p) const { return choices_[p]; }
  long long radius_map_count() const;

  FiniteTopology generate_topology() const;
  bool dist_is_bottom(int a, int b) const;
  bool connected_metric() const;

  // Explicit good-set table over an enumerated U, as an Omega space with
  // one base element per radius map. Only for small instances.
  OmegaSpace materialize(long long cap = 5000) const;

 private:
  WalkSpace() = default;
  bool step_allowed(int p, int option, int q) const;
  std::vector<PointMask> step_graph(const std::vector<int>& choice) const;

  Kind kind_ = Kind::Product;
  bool box_ = false;
  std::vector<TableSpace> factors_;  // product/sum factors; quotient source
  std::vector<int> equiv_;           // quotient: source point -> class
  std::vector<std::vector<int>> tuples_;  // product: carrier -> factor points
  std::vector<int> component_;       // sum: carrier -> summand index
  std::vector<int> local_;           // sum: carrier -> point within summand
  std::vector<std::string> points_;
  std::vector<int> choices_;
  std::vector<ElemSet> factor_radii_;  // per factor, positives (minimal first)
};

PointMask reach_from(const std::vector<PointMask>& adj, int from);

}  // namespace vq
