#include "vq/topology.hpp"

#include <algorithm>
#include <set>

namespace vq {

namespace {

std::vector<PointMask> canonical(std::vector<PointMask> opens) {
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  return opens;
}

std::vector<std::string> default_points(int n) {
  std::vector<std::string> pts(n);
  for (int i = 0; i < n; ++i) pts[i] = "p" + std::to_string(i);
  return pts;
}

// Smallest family containing `fam` that is closed under union and
// intersection and contains the empty set and `full`.
std::vector<PointMask> close_family(std::vector<PointMask> fam, PointMask full) {
  std::set<PointMask> s(fam.begin(), fam.end());
  s.insert(0);
  s.insert(full);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<PointMask> cur(s.begin(), s.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        if (s.insert(cur[i] | cur[j]).second) grew = true;
        if (s.insert(cur[i] & cur[j]).second) grew = true;
      }
  }
  return std::vector<PointMask>(s.begin(), s.end());
}

}  // namespace

FiniteTopology::FiniteTopology(std::vector<std::string> points,
                               std::vector<PointMask> opens)
    : points_(std::move(points)), opens_(canonical(std::move(opens))) {
  if (points_.empty() || points_.size() > 20)
    throw InputError("topology: carrier size out of range");
  PointMask f = full();
  bool has_empty = false, has_full = false;
  for (PointMask u : opens_) {
    if ((u & ~f) != 0) throw InputError("topology: open set outside carrier");
    if (u == 0) has_empty = true;
    if (u == f) has_full = true;
  }
  if (!has_empty || !has_full)
    throw InputError("topology: must contain the empty set and the carrier");
  for (PointMask u : opens_)
    for (PointMask v : opens_) {
      if (!is_open(u | v)) throw InputError("topology: not closed under union");
      if (!is_open(u & v)) throw InputError("topology: not closed under intersection");
    }
}

bool FiniteTopology::is_open(PointMask u) const {
  return std::binary_search(opens_.begin(), opens_.end(), u);
}

PointMask FiniteTopology::interior(PointMask u) const {
  PointMask out = 0;
  for (PointMask o : opens_)
    if ((o & ~u) == 0) out |= o;
  return out;
}

PointMask FiniteTopology::closure(PointMask u) const {
  return ~interior(~u & full()) & full();
}

PointMask FiniteTopology::minimal_open(int x) const {
  PointMask out = full();
  for (PointMask o : opens_)
    if (o & (PointMask(1) << x)) out &= o;
  return out;
}

std::vector<PointMask> FiniteTopology::closed_sets() const {
  std::vector<PointMask> out;
  for (PointMask o : opens_) out.push_back(~o & full());
  return canonical(std::move(out));
}

std::string FiniteTopology::mask_str(PointMask m) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < size(); ++i)
    if (m & (PointMask(1) << i)) {
      if (!first) out += " ";
      out += points_[i];
      first = false;
    }
  return out + "}";
}

std::vector<FiniteTopology> enumerate_topologies(int n) {
  if (n < 1 || n > 4) throw InputError("enumerate_topologies: n limited to 4");
  const int nsub = 1 << n;
  const PointMask full = PointMask(nsub - 1);
  std::vector<FiniteTopology> out;
  auto pts = default_points(n);
  for (std::uint64_t fam = 0; fam < (std::uint64_t(1) << nsub); ++fam) {
    if (!(fam & 1) || !(fam >> (nsub - 1) & 1)) continue;  // need empty and full
    bool ok = true;
    for (int a = 0; a < nsub && ok; ++a) {
      if (!(fam >> a & 1)) continue;
      for (int b = a + 1; b < nsub && ok; ++b) {
        if (!(fam >> b & 1)) continue;
        if (!(fam >> (a | b) & 1) || !(fam >> (a & b) & 1)) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<PointMask> opens;
    for (int a = 0; a < nsub; ++a)
      if (fam >> a & 1) opens.push_back(PointMask(a));
    (void)full;
    out.emplace_back(pts, std::move(opens));
  }
  return out;
}

std::vector<FiniteTopology> topologies_from_random_seeds(int n, int trials,
                                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const PointMask full = (PointMask(1) << n) - 1;
  std::set<std::vector<PointMask>> found;
  auto pts = default_points(n);
  std::vector<FiniteTopology> out;
  for (int t = 0; t < trials; ++t) {
    std::vector<PointMask> fam;
    int k = int(rng() % (2 * n + 1));
    for (int i = 0; i < k; ++i) fam.push_back(PointMask(rng()) & full);
    auto opens = close_family(std::move(fam), full);
    if (found.insert(opens).second) out.emplace_back(pts, opens);
  }
  return out;
}

FiniteTopology product_topology(const FiniteTopology& a, const FiniteTopology& b) {
  const int na = a.size(), nb = b.size();
  if (na * nb > 20) throw InputError("product_topology: carrier too large");
  std::vector<std::string> pts;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) pts.push_back(a.points()[i] + "." + b.points()[j]);
  // open rectangles, then all unions of them
  std::set<PointMask> opens;
  for (PointMask u : a.opens())
    for (PointMask v : b.opens()) {
      PointMask r = 0;
      for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
          if ((u >> i & 1) && (v >> j & 1)) r |= PointMask(1) << (i * nb + j);
      opens.insert(r);
    }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<PointMask> cur(opens.begin(), opens.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j)
        if (opens.insert(cur[i] | cur[j]).second) grew = true;
  }
  return FiniteTopology(pts, std::vector<PointMask>(opens.begin(), opens.end()));
}

FiniteTopology sum_topology(const std::vector<FiniteTopology>& parts) {
  if (parts.empty()) throw InputError("sum_topology: no summands");
  std::vector<std::string> pts;
  std::vector<int> offset;
  int n = 0;
  for (size_t k = 0; k < parts.size(); ++k) {
    offset.push_back(n);
    for (auto& p : parts[k].points())
      pts.push_back("s" + std::to_string(k + 1) + "." + p);
    n += parts[k].size();
  }
  if (n > 20) throw InputError("sum_topology: carrier too large");
  // opens are arbitrary unions of per-part opens
  std::vector<PointMask> opens = {0};
  for (size_t k = 0; k < parts.size(); ++k) {
    std::vector<PointMask> next;
    for (PointMask acc : opens)
      for (PointMask u : parts[k].opens())
        next.push_back(acc | (u << offset[k]));
    opens = std::move(next);
  }
  return FiniteTopology(pts, std::move(opens));
}

FiniteTopology quotient_topology(const FiniteTopology& t, const std::vector<int>& equiv) {
  if (int(equiv.size()) != t.size()) throw InputError("quotient_topology: class map size");
  int nc = 0;
  for (int c : equiv) nc = std::max(nc, c + 1);
  std::vector<std::string> pts(nc);
  for (int i = 0; i < t.size(); ++i)
    if (pts[equiv[i]].empty()) pts[equiv[i]] = "q." + t.points()[i];
  std::vector<PointMask> opens;
  for (PointMask u = 0; u < (PointMask(1) << nc); ++u) {
    PointMask pre = 0;
    for (int i = 0; i < t.size(); ++i)
      if (u >> equiv[i] & 1) pre |= PointMask(1) << i;
    if (t.is_open(pre)) opens.push_back(u);
  }
  return FiniteTopology(pts, std::move(opens));
}

FiniteTopology subspace_topology(const FiniteTopology& t, PointMask keep) {
  std::vector<int> idx(t.size(), -1);
  std::vector<std::string> pts;
  for (int i = 0; i < t.size(); ++i)
    if (keep >> i & 1) {
      idx[i] = int(pts.size());
      pts.push_back(t.points()[i]);
    }
  if (pts.empty()) throw InputError("subspace_topology: empty subset");
  std::vector<PointMask> opens;
  for (PointMask u : t.opens()) {
    PointMask trace = 0;
    for (int i = 0; i < t.size(); ++i)
      if ((u >> i & 1) && idx[i] >= 0) trace |= PointMask(1) << idx[i];
    opens.push_back(trace);
  }
  return FiniteTopology(pts, std::move(opens));
}

FiniteTopology topology_join(const FiniteTopology& a, const FiniteTopology& b) {
  if (a.size() != b.size()) throw InputError("topology_join: carrier mismatch");
  std::vector<PointMask> fam = a.opens();
  for (PointMask u : b.opens()) fam.push_back(u);
  return FiniteTopology(a.points(), close_family(std::move(fam), a.full()));
}

FiniteTopology topology_meet(const FiniteTopology& a, const FiniteTopology& b) {
  if (a.size() != b.size()) throw InputError("topology_meet: carrier mismatch");
  std::vector<PointMask> fam;
  for (PointMask u : a.opens())
    if (b.is_open(u)) fam.push_back(u);
  return FiniteTopology(a.points(), std::move(fam));
}

bool is_T0(const FiniteTopology& t) {
  for (int x = 0; x < t.size(); ++x)
    for (int y = x + 1; y < t.size(); ++y) {
      bool separated = false;
      for (PointMask u : t.opens())
        if (bool(u >> x & 1) != bool(u >> y & 1)) { separated = true; break; }
      if (!separated) return false;
    }
  return true;
}

bool is_T1(const FiniteTopology& t) {
  for (int x = 0; x < t.size(); ++x)
    for (int y = 0; y < t.size(); ++y) {
      if (x == y) continue;
      bool found = false;
      for (PointMask u : t.opens())
        if ((u >> x & 1) && !(u >> y & 1)) { found = true; break; }
      if (!found) return false;
    }
  return true;
}

bool is_regular_topo(const FiniteTopology& t) {
  for (PointMask c : t.closed_sets())
    for (int x = 0; x < t.size(); ++x) {
      if (c >> x & 1) continue;
      bool found = false;
      for (PointMask u : t.opens()) {
        if (!(u >> x & 1)) continue;
        for (PointMask v : t.opens())
          if ((c & ~v) == 0 && (u & v) == 0) { found = true; break; }
        if (found) break;
      }
      if (!found) return false;
    }
  return true;
}

bool is_connected_topo(const FiniteTopology& t) {
  for (PointMask u : t.opens())
    if (u != 0 && u != t.full() && t.is_open(~u & t.full())) return false;
  return true;
}

bool continuous_map(const FiniteTopology& a, const FiniteTopology& b,
                    const std::vector<int>& f) {
  if (int(f.size()) != a.size()) throw InputError("continuous_map: map not total");
  for (PointMask v : b.opens()) {
    PointMask pre = 0;
    for (int i = 0; i < a.size(); ++i)
      if (v >> f[i] & 1) pre |= PointMask(1) << i;
    if (!a.is_open(pre)) return false;
  }
  return true;
}

bool homeomorphic_under(const FiniteTopology& a, const FiniteTopology& b,
                        const std::vector<int>& bijection) {
  if (a.size() != b.size()) return false;
  std::vector<PointMask> mapped;
  for (PointMask u : a.opens()) {
    PointMask v = 0;
    for (int i = 0; i < a.size(); ++i)
      if (u >> i & 1) v |= PointMask(1) << bijection[i];
    mapped.push_back(v);
  }
  std::sort(mapped.begin(), mapped.end());
  return mapped == b.opens();
}

}  // namespace vq
