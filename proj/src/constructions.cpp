#include "vq/constructions.hpp"

#include <algorithm>

namespace vq {

bool admits(const TableSpace& s, const AdmissionRelation& r, const Walk& w) {
  for (auto& [eps, x] : r.pairs) {
    if (x < 0 || x >= s.size()) throw InputError("admission: point out of range");
    if (!s.quantale->positive(eps)) throw InputError("admission: radius not positive");
  }
  for (int i : w.points)
    if (i < 0 || i >= s.size()) throw InputError("admission: walk leaves the space");
  for (int i = 0; i + 1 < int(w.points.size()); ++i) {
    bool ok = false;
    for (auto& [eps, x] : r.pairs)
      if (x == w.points[i] && s.vwell_above(eps, s.d(x, w.points[i + 1]))) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

PointMask reach_from(const std::vector<PointMask>& adj, int from) {
  PointMask seen = PointMask(1) << from;
  for (bool grew = true; grew;) {
    grew = false;
    for (size_t u = 0; u < adj.size(); ++u)
      if ((seen >> u & 1) && (adj[u] | seen) != seen) {
        seen |= adj[u];
        grew = true;
      }
  }
  return seen;
}

WalkSpace WalkSpace::product(std::vector<TableSpace> factors, bool box) {
  if (factors.empty()) throw InputError("product: no factors");
  WalkSpace w;
  w.kind_ = Kind::Product;
  w.box_ = box;
  w.factors_ = std::move(factors);
  for (auto& f : w.factors_) w.factor_radii_.push_back(f.sweep_radii());
  // carrier = tuples, first factor major, matching the oracle's ordering
  std::vector<int> cur(w.factors_.size(), 0);
  for (;;) {
    w.tuples_.push_back(cur);
    std::string name;
    for (size_t i = 0; i < cur.size(); ++i)
      name += (i ? "." : "") + w.factors_[i].points[cur[i]];
    w.points_.push_back(name);
    int i = int(cur.size()) - 1;
    for (; i >= 0; --i) {
      if (++cur[i] < w.factors_[i].size()) break;
      cur[i] = 0;
    }
    if (i < 0) break;
  }
  long long tuple_options = 1;
  for (auto& r : w.factor_radii_) {
    tuple_options *= (long long)(r.size());
    if (tuple_options > 1'000'000) throw InputError("product: radius tuple space too large");
  }
  w.choices_.assign(w.points_.size(), int(tuple_options));
  return w;
}

WalkSpace WalkSpace::sum(std::vector<TableSpace> summands) {
  if (summands.empty()) throw InputError("sum: no summands");
  WalkSpace w;
  w.kind_ = Kind::Sum;
  w.factors_ = std::move(summands);
  for (auto& f : w.factors_) w.factor_radii_.push_back(f.sweep_radii());
  for (size_t k = 0; k < w.factors_.size(); ++k)
    for (int p = 0; p < w.factors_[k].size(); ++p) {
      w.component_.push_back(int(k));
      w.local_.push_back(p);
      w.points_.push_back("s" + std::to_string(k + 1) + "." + w.factors_[k].points[p]);
      // each point draws radii from its own summand's positives
      w.choices_.push_back(int(w.factor_radii_[k].size()));
    }
  return w;
}

WalkSpace WalkSpace::quotient(TableSpace source, const std::vector<int>& equiv) {
  if (int(equiv.size()) != source.size())
    throw InputError("quotient: class map must cover the carrier");
  int nc = 0;
  for (int c : equiv) {
    if (c < 0) throw InputError("quotient: negative class id");
    nc = std::max(nc, c + 1);
  }
  std::vector<bool> seen(nc, false);
  for (int c : equiv) seen[c] = true;
  for (bool b : seen)
    if (!b) throw InputError("quotient: class ids must be onto");
  WalkSpace w;
  w.kind_ = Kind::Quotient;
  w.equiv_ = equiv;
  w.factors_.push_back(std::move(source));
  w.factor_radii_.push_back(w.factors_[0].sweep_radii());
  w.points_.assign(nc, "");
  for (int y = 0; y < w.factors_[0].size(); ++y)
    if (w.points_[equiv[y]].empty())
      w.points_[equiv[y]] = "q." + w.factors_[0].points[y];
  w.choices_.assign(nc, int(w.factor_radii_[0].size()));
  return w;
}

bool WalkSpace::step_allowed(int p, int option, int q) const {
  switch (kind_) {
    case Kind::Product: {
      // decode the radius tuple, last factor fastest
      int o = option;
      for (int i = int(factors_.size()) - 1; i >= 0; --i) {
        const auto& radii = factor_radii_[i];
        Elem r = radii[o % int(radii.size())];
        o /= int(radii.size());
        if (!factors_[i].vwell_above(r, factors_[i].d(tuples_[p][i], tuples_[q][i])))
          return false;
      }
      return true;
    }
    case Kind::Sum: {
      if (component_[p] != component_[q]) return false;
      const TableSpace& f = factors_[component_[p]];
      Elem r = factor_radii_[component_[p]][option];
      return f.vwell_above(r, f.d(local_[p], local_[q]));
    }
    case Kind::Quotient: {
      const TableSpace& y = factors_[0];
      Elem r = factor_radii_[0][option];
      for (int a = 0; a < y.size(); ++a)
        if (equiv_[a] == p)
          for (int b = 0; b < y.size(); ++b)
            if (equiv_[b] == q && y.vwell_above(r, y.d(a, b))) return true;
      return false;
    }
  }
  return false;
}

std::vector<PointMask> WalkSpace::step_graph(const std::vector<int>& choice) const {
  std::vector<PointMask> adj(size(), 0);
  for (int p = 0; p < size(); ++p)
    for (int q = 0; q < size(); ++q)
      if (step_allowed(p, choice[p], q)) adj[p] |= PointMask(1) << q;
  return adj;
}

PointMask WalkSpace::minimal_ball(int x) const {
  return ball_of_radius_map(std::vector<int>(size(), 0), x);
}

PointMask WalkSpace::ball_of_radius_map(const std::vector<int>& choice, int x) const {
  return reach_from(step_graph(choice), x);
}

FiniteTopology WalkSpace::generate_topology() const {
  if (size() > 16) throw InputError("walk space: carrier too large for topology");
  std::vector<PointMask> minballs;
  for (int x = 0; x < size(); ++x) minballs.push_back(minimal_ball(x));
  std::vector<PointMask> opens;
  const PointMask full = (PointMask(1) << size()) - 1;
  for (PointMask u = 0; u <= full; ++u) {
    bool open = true;
    for (int x = 0; x < size() && open; ++x)
      if ((u >> x & 1) && (minballs[x] & ~u)) open = false;
    if (open) opens.push_back(u);
  }
  return FiniteTopology(points_, std::move(opens));
}

bool WalkSpace::dist_is_bottom(int a, int b) const {
  // d(a,b) = bottom iff every radius map admits a walk, iff the strictest
  // one does
  return (minimal_ball(a) >> b & 1) != 0;
}

bool WalkSpace::connected_metric() const {
  std::vector<PointMask> adj(size(), 0);
  for (int a = 0; a < size(); ++a) {
    PointMask ball = minimal_ball(a);
    for (int b = 0; b < size(); ++b)
      if (ball >> b & 1) {
        adj[a] |= PointMask(1) << b;
        adj[b] |= PointMask(1) << a;
      }
  }
  return reach_from(adj, 0) == (PointMask(1) << size()) - 1;
}

long long WalkSpace::radius_map_count() const {
  long long total = 1;
  for (int c : choices_) {
    total *= (long long)(c);
    if (total > (1LL << 40)) return -1;  // effectively unbounded
  }
  return total;
}

OmegaSpace WalkSpace::materialize(long long cap) const {
  long long count = radius_map_count();
  if (count < 0 || count > cap)
    throw InputError("materialize: radius map space too large");
  const int n = size();
  std::vector<Bits> good(n * n, Bits(int(count)));
  std::vector<int> choice(n, 0);
  for (int r = 0; r < int(count); ++r) {
    auto adj = step_graph(choice);
    for (int a = 0; a < n; ++a) {
      PointMask reach = reach_from(adj, a);
      for (int b = 0; b < n; ++b)
        if (reach >> b & 1) good[a * n + b].set(r);
    }
    int i = 0;
    for (; i < n; ++i) {
      if (++choice[i] < choices_[i]) break;
      choice[i] = 0;
    }
    if (i == n) break;
  }
  std::vector<std::string> base_names;
  for (int r = 0; r < int(count); ++r) base_names.push_back("R" + std::to_string(r));
  std::vector<std::vector<OmegaElement>> d(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      d[a].push_back(OmegaElement::principal(int(count), good[a * n + b]));
  return OmegaSpace(std::move(base_names), points_, std::move(d));
}

}  // namespace vq
