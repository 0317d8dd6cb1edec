#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vq/lattice.hpp"
#include "vq/omega.hpp"
#include "vq/topology.hpp"

namespace vq {

// Continuity space over an explicit finite value quantale: a point set with
// a V-valued distance table. d(x,x) = bottom is enforced; the triangle
// inequality is a checkable property, not a construction precondition (the
// motivating four-point example violates it on purpose).
struct TableSpace {
  using Value = Elem;

  std::shared_ptr<const ValueQuantale> quantale;
  std::vector<std::string> points;
  std::vector<std::vector<Elem>> dist;

  TableSpace(std::shared_ptr<const ValueQuantale> q, std::vector<std::string> pts,
             std::vector<std::vector<Elem>> d);

  int size() const { return int(points.size()); }
  Value d(int x, int y) const { return dist[x][y]; }
  bool vbottom(Value v) const { return v == quantale->bottom(); }
  Value vtop() const { return quantale->top(); }
  bool vleq(Value a, Value b) const { return quantale->leq(a, b); }
  Value vmeet(Value a, Value b) const { return quantale->lattice().meet2(a, b); }
  Value vjoin(Value a, Value b) const { return quantale->lattice().join2(a, b); }
  Value vplus(Value a, Value b) const { return quantale->plus(a, b); }
  bool vwell_above(Value r, Value v) const { return quantale->well_above(r, v); }
  bool vpositive(Value r) const { return quantale->positive(r); }
  std::vector<Value> sweep_radii() const;  // all positives, bottom first
  std::string vstr(Value v) const { return quantale->name(v); }

  int point_index(const std::string& name) const;
  std::optional<std::string> triangle_violation() const;
};

// Continuity space over a symbolic Omega(base) quantale; every distance is
// a finitely generated downward-closed family.
struct OmegaSpace {
  using Value = OmegaElement;

  std::vector<std::string> base;
  std::vector<std::string> points;
  std::vector<std::vector<OmegaElement>> dist;

  OmegaSpace(std::vector<std::string> base_names, std::vector<std::string> pts,
             std::vector<std::vector<OmegaElement>> d);

  int size() const { return int(points.size()); }
  Value d(int x, int y) const { return dist[x][y]; }
  bool vbottom(const Value& v) const { return v.is_bottom(); }
  Value vtop() const { return OmegaElement::top(int(base.size())); }
  bool vleq(const Value& a, const Value& b) const { return omega_leq(a, b); }
  Value vmeet(const Value& a, const Value& b) const {
    return omega_meet({a, b}, int(base.size()));
  }
  Value vjoin(const Value& a, const Value& b) const { return omega_plus(a, b); }
  Value vplus(const Value& a, const Value& b) const { return omega_plus(a, b); }
  bool vwell_above(const Value& r, const Value& v) const { return omega_well_above(r, v); }
  bool vpositive(const Value&) const { return true; }  // all families here are finite
  // principal radii: the full base (smallest balls), each singleton, and
  // the empty set; enough to decide every exists-a-radius question because
  // balls shrink as radii shrink and the full-base radius is minimal
  std::vector<Value> sweep_radii() const;
  std::string vstr(const Value& v) const { return omega_str(v, base); }

  int point_index(const std::string& name) const;
  std::optional<std::string> triangle_violation() const;
};

// ---- generic operations on either space kind ----------------------------

template <class S>
PointMask ball(const S& s, const typename S::Value& eps, int x) {
  if (!s.vpositive(eps)) throw InputError("ball: radius not positive");
  PointMask out = 0;
  for (int y = 0; y < s.size(); ++y)
    if (s.vwell_above(eps, s.d(x, y))) out |= PointMask(1) << y;
  return out;
}

// The functor O on objects: U is open iff every x in U has a positive
// radius whose ball stays inside U. Candidate radii come from
// sweep_radii(), which always contains the pointwise-minimal positive
// radius, and balls grow with the radius, so the sweep is exact.
template <class S>
FiniteTopology generate_topology(const S& s) {
  if (s.size() > 16) throw InputError("generate_topology: carrier too large");
  auto radii = s.sweep_radii();
  std::vector<std::vector<PointMask>> balls(radii.size());
  for (size_t r = 0; r < radii.size(); ++r)
    for (int x = 0; x < s.size(); ++x) balls[r].push_back(ball(s, radii[r], x));
  std::vector<PointMask> opens;
  const PointMask full = (PointMask(1) << s.size()) - 1;
  for (PointMask u = 0; u <= full; ++u) {
    bool open = true;
    for (int x = 0; x < s.size() && open; ++x) {
      if (!(u >> x & 1)) continue;
      bool found = false;
      for (size_t r = 0; r < radii.size() && !found; ++r)
        if ((balls[r][x] & ~u) == 0) found = true;
      open = found;
    }
    if (open) opens.push_back(u);
  }
  return FiniteTopology(s.points, std::move(opens));
}

template <class S>
typename S::Value point_set_distance(const S& s, int x, PointMask c) {
  typename S::Value acc = s.vtop();
  for (int y = 0; y < s.size(); ++y)
    if (c >> y & 1) acc = s.vmeet(acc, s.d(x, y));
  return acc;
}

template <class S>
PointMask closure_pts(const S& s, PointMask c) {
  PointMask out = 0;
  for (int z = 0; z < s.size(); ++z)
    if (s.vbottom(point_set_distance(s, z, c))) out |= PointMask(1) << z;
  return out;
}

template <class S>
bool is_closed_metric(const S& s, PointMask c) {
  return closure_pts(s, c) == c;
}

template <class S>
bool is_kolmogorov(const S& s) {
  for (int x = 0; x < s.size(); ++x)
    for (int y = x + 1; y < s.size(); ++y)
      if (s.vbottom(s.d(x, y)) && s.vbottom(s.d(y, x))) return false;
  return true;
}

template <class S>
bool is_frechet(const S& s) {
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y)
      if (x != y && s.vbottom(s.d(x, y))) return false;
  return true;
}

template <class S>
bool is_symmetric(const S& s) {
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y)
      if (!(s.d(x, y) == s.d(y, x))) return false;
  return true;
}

template <class S>
PointMask ball_around_set(const S& s, const std::vector<typename S::Value>& radius_map,
                          PointMask c) {
  PointMask out = 0;
  for (int y = 0; y < s.size(); ++y)
    if (c >> y & 1) out |= ball(s, radius_map[y], y);
  return out;
}

// Regularity, clause (c): sup_R d(x, B_R(C)) = 0 implies d(x, C) = 0 for
// every closed C. Balls shrink and distances grow as radii shrink, and the
// constant minimal radius lies below every R, so the sup is attained there.
template <class S>
bool is_regular_metric(const S& s) {
  auto radii = s.sweep_radii();
  std::vector<typename S::Value> rmin(s.size(), radii.front());
  FiniteTopology top = generate_topology(s);
  for (PointMask c : top.closed_sets())
    for (int x = 0; x < s.size(); ++x) {
      auto sup = point_set_distance(s, x, ball_around_set(s, rmin, c));
      if (s.vbottom(sup) && !s.vbottom(point_set_distance(s, x, c))) return false;
    }
  return true;
}

// Same predicate by full quantification over PointRadiusMaps; the table
// sweep is exponential, so callers cap it. Used to validate the reduction.
bool is_regular_metric_full_sweep(const TableSpace& s, long long cap = 2'000'000);

// epsilon-delta continuity between (possibly different-flavoured) spaces.
template <class A, class B>
bool epsilon_delta_continuous(const std::vector<int>& f, const A& src, const B& dst) {
  if (int(f.size()) != src.size()) throw InputError("continuity: map not total");
  for (int v : f)
    if (v < 0 || v >= dst.size()) throw InputError("continuity: image out of range");
  auto deltas = src.sweep_radii();
  auto epsilons = dst.sweep_radii();
  for (int x = 0; x < src.size(); ++x)
    for (auto& eps : epsilons) {
      bool found = false;
      for (auto& del : deltas) {
        bool ok = true;
        for (int x2 = 0; x2 < src.size() && ok; ++x2)
          if (src.vwell_above(del, src.d(x, x2)) &&
              !dst.vwell_above(eps, dst.d(f[x], f[x2])))
            ok = false;
        if (ok) { found = true; break; }
      }
      if (!found) return false;
    }
  return true;
}

// Weiss's walk criterion evaluated at the constant minimal radius map: a
// step x_i -> x_{i+1} is allowed when either oriented distance is strictly
// inside the radius at its endpoint.
template <class S>
bool connected_via_constant_r0(const S& s) {
  auto radii = s.sweep_radii();
  const auto& r0 = radii.front();
  std::vector<PointMask> adj(s.size(), 0);
  for (int u = 0; u < s.size(); ++u)
    for (int v = 0; v < s.size(); ++v)
      if (s.vwell_above(r0, s.d(u, v)) || s.vwell_above(r0, s.d(v, u)))
        adj[u] |= PointMask(1) << v;
  PointMask seen = 1;
  for (bool grew = true; grew;) {
    grew = false;
    for (int u = 0; u < s.size(); ++u)
      if (seen >> u & 1)
        if ((adj[u] | seen) != seen) { seen |= adj[u]; grew = true; }
  }
  return seen == (PointMask(1) << s.size()) - 1;
}

// Full quantification over radius maps (capped); tables only.
bool connected_full_sweep(const TableSpace& s, long long cap = 2'000'000);

template <class S>
bool is_connected_metric(const S& s) {
  return connected_via_constant_r0(s);
}

// The functor M on objects: the Omega(tau)-space whose distance d(x,y) is
// the down-closure of S(x,y) = {U in tau : x in U implies y in U}.
OmegaSpace metrize(const FiniteTopology& top);

}  // namespace vq
