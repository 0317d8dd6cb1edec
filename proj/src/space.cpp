#include "vq/space.hpp"

namespace vq {

namespace {

template <class S>
int point_index_impl(const S& s, const std::string& name) {
  for (int i = 0; i < s.size(); ++i)
    if (s.points[i] == name) return i;
  throw InputError("unknown point: " + name);
}

template <class S>
std::optional<std::string> triangle_violation_impl(const S& s) {
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y)
      for (int z = 0; z < s.size(); ++z)
        if (!s.vleq(s.d(x, z), s.vplus(s.d(x, y), s.d(y, z))))
          return "d(" + s.points[x] + "," + s.points[z] + ") > d(" + s.points[x] + "," +
                 s.points[y] + ") + d(" + s.points[y] + "," + s.points[z] + ")";
  return std::nullopt;
}

}  // namespace

TableSpace::TableSpace(std::shared_ptr<const ValueQuantale> q,
                       std::vector<std::string> pts, std::vector<std::vector<Elem>> d)
    : quantale(std::move(q)), points(std::move(pts)), dist(std::move(d)) {
  if (!quantale) throw InputError("space: missing quantale");
  if (points.empty()) throw InputError("space: no points");
  if (dist.size() != points.size()) throw InputError("space: distance table size");
  for (auto& row : dist) {
    if (row.size() != points.size()) throw InputError("space: distance table size");
    for (Elem e : row) quantale->lattice().check_element(e);
  }
  for (int x = 0; x < size(); ++x)
    if (dist[x][x] != quantale->bottom())
      throw InputError("space: d(x,x) must be bottom at " + points[x]);
}

std::vector<Elem> TableSpace::sweep_radii() const {
  // bottom-most first along the fixed linear extension, so the front is the
  // least positive element (a value quantale's positives form a filter)
  ElemSet out;
  auto desc = quantale->lattice().descending_order();
  for (auto it = desc.rbegin(); it != desc.rend(); ++it)
    if (quantale->positive(*it)) out.push_back(*it);
  return out;
}

int TableSpace::point_index(const std::string& name) const {
  return point_index_impl(*this, name);
}

std::optional<std::string> TableSpace::triangle_violation() const {
  return triangle_violation_impl(*this);
}

OmegaSpace::OmegaSpace(std::vector<std::string> base_names, std::vector<std::string> pts,
                       std::vector<std::vector<OmegaElement>> d)
    : base(std::move(base_names)), points(std::move(pts)), dist(std::move(d)) {
  if (points.empty()) throw InputError("space: no points");
  if (dist.size() != points.size()) throw InputError("space: distance table size");
  for (auto& row : dist) {
    if (row.size() != points.size()) throw InputError("space: distance table size");
    for (auto& e : row)
      if (e.base_size() != int(base.size()))
        throw InputError("space: distance over wrong base");
  }
  for (int x = 0; x < size(); ++x)
    if (!dist[x][x].is_bottom())
      throw InputError("space: d(x,x) must be bottom at " + points[x]);
}

std::vector<OmegaElement> OmegaSpace::sweep_radii() const {
  const int bs = int(base.size());
  std::vector<OmegaElement> out;
  out.push_back(OmegaElement::bottom(bs));  // minimal positive radius
  for (int b = 0; b < bs; ++b) {
    Bits one(bs);
    one.set(b);
    out.push_back(OmegaElement::principal(bs, one));
  }
  out.push_back(OmegaElement::principal(bs, Bits(bs)));
  return out;
}

int OmegaSpace::point_index(const std::string& name) const {
  return point_index_impl(*this, name);
}

std::optional<std::string> OmegaSpace::triangle_violation() const {
  return triangle_violation_impl(*this);
}

bool is_regular_metric_full_sweep(const TableSpace& s, long long cap) {
  ElemSet pos = s.quantale->lattice().positives();
  const int n = s.size();
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<long long>(pos.size());
    if (total > cap) throw InputError("regularity sweep: too many radius maps");
  }
  FiniteTopology top = generate_topology(s);
  auto closed = top.closed_sets();
  for (PointMask c : closed)
    for (int x = 0; x < n; ++x) {
      // join over all radius maps of d(x, B_R(C))
      Elem sup = s.quantale->bottom();
      std::vector<size_t> pick(n, 0);
      while (true) {
        std::vector<Elem> rmap(n);
        for (int i = 0; i < n; ++i) rmap[i] = pos[pick[i]];
        sup = s.vjoin(sup, point_set_distance(s, x, ball_around_set(s, rmap, c)));
        int i = 0;
        for (; i < n; ++i) {
          if (++pick[i] < pos.size()) break;
          pick[i] = 0;
        }
        if (i == n) break;
      }
      if (sup == s.quantale->bottom() && !s.vbottom(point_set_distance(s, x, c)))
        return false;
    }
  return true;
}

bool connected_full_sweep(const TableSpace& s, long long cap) {
  ElemSet pos = s.quantale->lattice().positives();
  const int n = s.size();
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<long long>(pos.size());
    if (total > cap) throw InputError("connectedness sweep: too many radius maps");
  }
  std::vector<size_t> pick(n, 0);
  while (true) {
    std::vector<PointMask> adj(n, 0);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (s.vwell_above(pos[pick[u]], s.d(u, v)) ||
            s.vwell_above(pos[pick[v]], s.d(v, u)))
          adj[u] |= PointMask(1) << v;
    PointMask seen = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (int u = 0; u < n; ++u)
        if ((seen >> u & 1) && (adj[u] | seen) != seen) { seen |= adj[u]; grew = true; }
    }
    if (seen != (PointMask(1) << n) - 1) return false;
    int i = 0;
    for (; i < n; ++i) {
      if (++pick[i] < pos.size()) break;
      pick[i] = 0;
    }
    if (i == n) break;
  }
  return true;
}

OmegaSpace metrize(const FiniteTopology& top) {
  const int n = top.size();
  const int bs = int(top.opens().size());
  std::vector<std::string> base_names;
  for (PointMask u : top.opens()) base_names.push_back(top.mask_str(u));
  std::vector<std::vector<OmegaElement>> d(n, std::vector<OmegaElement>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Bits s(bs);
      for (int u = 0; u < bs; ++u) {
        PointMask open = top.opens()[u];
        if (!(open >> x & 1) || (open >> y & 1)) s.set(u);
      }
      d[x][y] = OmegaElement::principal(bs, s);
    }
  return OmegaSpace(base_names, top.points(), std::move(d));
}

}  // namespace vq
