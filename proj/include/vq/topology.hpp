#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vq/lattice.hpp"

namespace vq {

using PointMask = std::uint32_t;

// Explicit finite topology: point names plus the full family of open sets,
// validated to contain the empty set and the carrier and to be closed under
// union and binary intersection.
class FiniteTopology {
 public:
  FiniteTopology(std::vector<std::string> points, std::vector<PointMask> opens);

  int size() const { return int(points_.size()); }
  const std::vector<std::string>& points() const { return points_; }
  PointMask full() const { return size() == 32 ? ~PointMask(0) : (PointMask(1) << size()) - 1; }
  const std::vector<PointMask>& opens() const { return opens_; }

  bool is_open(PointMask u) const;
  bool is_closed(PointMask u) const { return is_open(~u & full()); }
  PointMask interior(PointMask u) const;
  PointMask closure(PointMask u) const;
  PointMask minimal_open(int x) const;  // intersection of all opens containing x
  std::vector<PointMask> closed_sets() const;

  friend bool operator==(const FiniteTopology& a, const FiniteTopology& b) {
    return a.points_.size() == b.points_.size() && a.opens_ == b.opens_;
  }

  std::string mask_str(PointMask m) const;

 private:
  std::vector<std::string> points_;
  std::vector<PointMask> opens_;  // sorted, deduplicated
};

// ---- brute-force oracles; deliberately share no code with the metric side

std::vector<FiniteTopology> enumerate_topologies(int n);  // n <= 4

// Second, independent generator: closures of random subset families.
// Returns the distinct topologies found after `trials` seeds.
std::vector<FiniteTopology> topologies_from_random_seeds(int n, int trials,
                                                         std::uint64_t seed);

FiniteTopology product_topology(const FiniteTopology& a, const FiniteTopology& b);
FiniteTopology sum_topology(const std::vector<FiniteTopology>& parts);
// equiv maps each point to its class id in [0, #classes)
FiniteTopology quotient_topology(const FiniteTopology& t, const std::vector<int>& equiv);
FiniteTopology subspace_topology(const FiniteTopology& t, PointMask keep);

FiniteTopology topology_join(const FiniteTopology& a, const FiniteTopology& b);
FiniteTopology topology_meet(const FiniteTopology& a, const FiniteTopology& b);

bool is_T0(const FiniteTopology& t);
bool is_T1(const FiniteTopology& t);
bool is_regular_topo(const FiniteTopology& t);
bool is_connected_topo(const FiniteTopology& t);

// Topological continuity of f: a -> b (f[i] = image point index).
bool continuous_map(const FiniteTopology& a, const FiniteTopology& b,
                    const std::vector<int>& f);

// Equality up to the supplied point bijection a -> b.
bool homeomorphic_under(const FiniteTopology& a, const FiniteTopology& b,
                        const std::vector<int>& bijection);

}  // namespace vq
