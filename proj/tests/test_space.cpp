#include "doctest.h"

#include "corpus.hpp"

using namespace vq;
using namespace vqtest;

namespace {

PointMask mask_of(std::initializer_list<int> xs) {
  PointMask m = 0;
  for (int x : xs) m |= PointMask(1) << x;
  return m;
}

std::vector<FiniteTopology> small_topology_corpus() {
  std::vector<FiniteTopology> out;
  for (auto& t : enumerate_topologies(1)) out.push_back(t);
  for (auto& t : enumerate_topologies(2)) out.push_back(t);
  for (auto& t : enumerate_topologies(3)) out.push_back(t);
  return out;
}

std::vector<TableSpace> table_space_corpus() {
  std::vector<TableSpace> out;
  out.push_back(sierpinski_space());
  out.push_back(discrete2_space());
  out.push_back(indiscrete2_space());
  out.push_back(four_point_space(strict_levels_quantale()));
  std::mt19937_64 rng(424242);
  for (auto& q : quantale_catalog())
    for (int n = 2; n <= 4; ++n) {
      out.push_back(random_table_space(rng, q, n, false));
      out.push_back(random_table_space(rng, q, n, true));
    }
  return out;
}

}  // namespace

TEST_CASE("space construction enforces zero self-distance") {
  auto q = bool2_quantale();
  std::vector<std::vector<Elem>> bad = {{1, 0}, {0, 0}};
  CHECK_THROWS_AS(TableSpace(q, {"x", "y"}, bad), InputError);
}

TEST_CASE("the four-point example: balls and interior") {
  TableSpace s = four_point_space(strict_levels_quantale());
  CHECK(s.triangle_violation().has_value());  // not a continuity space, on purpose
  Elem two = s.quantale->lattice().index_of("2");
  CHECK(ball(s, two, 0) == mask_of({0, 1, 3}));  // B_2(a) = {a,b,d}
  FiniteTopology t = generate_topology(s);
  CHECK(t.interior(mask_of({0, 1, 3})) == mask_of({3}));  // int = {d}
  CHECK(t.opens() == std::vector<PointMask>(
                         {0, mask_of({0, 1, 2}), mask_of({3}), mask_of({0, 1, 2, 3})}));
}

TEST_CASE("balls always contain their center") {
  for (const TableSpace& s : table_space_corpus())
    for (Elem r : s.sweep_radii())
      for (int x = 0; x < s.size(); ++x) CHECK((ball(s, r, x) >> x & 1) == 1);
}

TEST_CASE("two-point asymmetric space over {bot,top}") {
  TableSpace s = sierpinski_space();
  Elem top = s.quantale->top();
  // top is well above top under the nonempty-subset convention, so the
  // top-radius ball around x picks up y as well
  CHECK(ball(s, top, 1) == mask_of({0, 1}));
  CHECK(ball(s, top, 0) == mask_of({0, 1}));
  CHECK(ball(s, s.quantale->bottom(), 0) == mask_of({0}));
  FiniteTopology t = generate_topology(s);
  CHECK(t == sierpinski_topology());
}

TEST_CASE("constant-zero distance generates opens {empty, X}") {
  TableSpace s = indiscrete2_space();
  FiniteTopology t = generate_topology(s);
  CHECK(t.opens() == std::vector<PointMask>({0, 3}));
}

TEST_CASE("two-point space with top distances both ways is discrete") {
  TableSpace s = discrete2_space();
  CHECK(generate_topology(s) == discrete_topology(2));
}

TEST_CASE("metrize: S-sets on Sierpinski, discrete, indiscrete") {
  OmegaSpace ms = metrize(sierpinski_topology());
  // d(y,x) = bottom: every open containing y contains x
  CHECK(ms.d(1, 0).is_bottom());
  CHECK_FALSE(ms.d(0, 1).is_bottom());
  // the generator of d(x,y) excludes exactly the open {x}
  CHECK(ms.d(0, 1).generators()[0].count() == 2);

  OmegaSpace md = metrize(discrete_topology(2));
  CHECK_FALSE(md.d(0, 1).is_bottom());
  CHECK_FALSE(md.d(1, 0).is_bottom());
  CHECK(md.d(0, 1).generators()[0].count() == 3);  // empty, {y}, X

  OmegaSpace mi = metrize(indiscrete_topology(2));
  CHECK(mi.d(0, 1).is_bottom());
  CHECK(mi.d(1, 0).is_bottom());
}

TEST_CASE("round trip: generate_topology(metrize(tau)) = tau on all small topologies") {
  for (const FiniteTopology& t : small_topology_corpus()) {
    OmegaSpace m = metrize(t);
    CHECK(m.triangle_violation() == std::nullopt);
    FiniteTopology back = generate_topology(m);
    CHECK(back == t);
  }
}

TEST_CASE("point-set distance and closure") {
  OmegaSpace ms = metrize(sierpinski_topology());
  CHECK(ms.vbottom(point_set_distance(ms, 0, mask_of({0}))));  // x in C
  // closure of {x} in metrized Sierpinski is {x,y}
  CHECK(closure_pts(ms, mask_of({0})) == mask_of({0, 1}));
  CHECK_FALSE(is_closed_metric(ms, mask_of({0})));
  CHECK(is_closed_metric(ms, mask_of({1})));
  OmegaSpace md = metrize(discrete_topology(2));
  CHECK(closure_pts(md, mask_of({0})) == mask_of({0}));
  // empty set: distance is top by the empty-meet convention, closure empty
  CHECK(ms.vtop() == point_set_distance(ms, 0, 0));
  CHECK(closure_pts(ms, 0) == 0);
}

TEST_CASE("metric closure equals topological closure") {
  for (const FiniteTopology& t : small_topology_corpus()) {
    OmegaSpace m = metrize(t);
    for (PointMask c = 0; c < (PointMask(1) << t.size()); ++c)
      CHECK(closure_pts(m, c) == t.closure(c));
  }
  for (const TableSpace& s : table_space_corpus()) {
    if (s.triangle_violation()) continue;
    FiniteTopology t = generate_topology(s);
    for (PointMask c = 0; c < (PointMask(1) << s.size()); ++c)
      CHECK(closure_pts(s, c) == t.closure(c));
  }
}

TEST_CASE("separation predicates on named spaces") {
  OmegaSpace ms = metrize(sierpinski_topology());
  CHECK(is_kolmogorov(ms));
  CHECK_FALSE(is_frechet(ms));
  CHECK_FALSE(is_kolmogorov(indiscrete2_space()));
  OmegaSpace md = metrize(discrete_topology(2));
  CHECK(is_kolmogorov(md));
  CHECK(is_frechet(md));
  CHECK(is_regular_metric(md));
}

TEST_CASE("separation predicates match the topological oracles") {
  for (const FiniteTopology& t : small_topology_corpus()) {
    OmegaSpace m = metrize(t);
    CAPTURE(t.opens().size());
    CHECK(is_kolmogorov(m) == is_T0(t));
    CHECK(is_frechet(m) == is_T1(t));
    CHECK(is_regular_metric(m) == is_regular_topo(t));
  }
  for (const TableSpace& s : table_space_corpus()) {
    if (s.triangle_violation()) continue;
    FiniteTopology t = generate_topology(s);
    CHECK(is_kolmogorov(s) == is_T0(t));
    CHECK(is_frechet(s) == is_T1(t));
    CHECK(is_regular_metric(s) == is_regular_topo(t));
  }
}

TEST_CASE("regularity: constant-minimal reduction equals the full sweep") {
  for (const TableSpace& s : table_space_corpus()) {
    if (s.triangle_violation()) continue;
    CHECK(is_regular_metric(s) == is_regular_metric_full_sweep(s));
  }
}

TEST_CASE("epsilon-delta continuity equals topological continuity") {
  std::vector<OmegaSpace> ms;
  std::vector<FiniteTopology> ts;
  for (auto& t : enumerate_topologies(2)) {
    ts.push_back(t);
    ms.push_back(metrize(t));
  }
  for (auto& t : enumerate_topologies(3)) {
    ts.push_back(t);
    ms.push_back(metrize(t));
  }
  for (size_t i = 0; i < ms.size(); ++i)
    for (size_t j = 0; j < ms.size(); ++j) {
      const int na = ms[i].size(), nb = ms[j].size();
      std::vector<int> f(na, 0);
      for (;;) {
        CHECK(epsilon_delta_continuous(f, ms[i], ms[j]) == continuous_map(ts[i], ts[j], f));
        int k = 0;
        for (; k < na; ++k) {
          if (++f[k] < nb) break;
          f[k] = 0;
        }
        if (k == na) break;
      }
    }
}

TEST_CASE("identity and constant maps are continuous") {
  for (const TableSpace& s : table_space_corpus()) {
    std::vector<int> id(s.size());
    for (int i = 0; i < s.size(); ++i) id[i] = i;
    CHECK(epsilon_delta_continuous(id, s, s));
    std::vector<int> cst(s.size(), 0);
    CHECK(epsilon_delta_continuous(cst, s, s));
  }
}

TEST_CASE("continuity example: metrized Sierpinski to metrized discrete") {
  OmegaSpace ms = metrize(sierpinski_topology());
  OmegaSpace md = metrize(discrete_topology(2));
  CHECK_FALSE(epsilon_delta_continuous({0, 1}, ms, md));
  CHECK_THROWS_AS(epsilon_delta_continuous({0}, ms, md), InputError);
}

TEST_CASE("connectedness: named examples") {
  OmegaSpace ms = metrize(sierpinski_topology());
  CHECK(is_connected_metric(ms));
  CHECK_FALSE(is_connected_metric(metrize(discrete_topology(2))));
  OmegaSpace one = metrize(discrete_topology(1));
  CHECK(is_connected_metric(one));
}

TEST_CASE("connectedness matches the oracle and the full radius sweep") {
  for (const TableSpace& s : table_space_corpus()) {
    if (s.triangle_violation()) continue;
    bool metric = is_connected_metric(s);
    CHECK(metric == is_connected_topo(generate_topology(s)));
    CHECK(metric == connected_full_sweep(s));
  }
  for (const FiniteTopology& t : small_topology_corpus())
    CHECK(is_connected_metric(metrize(t)) == is_connected_topo(t));
}

TEST_CASE("omega sweep radii: arbitrary principal balls contain the minimal ball") {
  for (auto& t : enumerate_topologies(2)) {
    OmegaSpace m = metrize(t);
    const int bs = int(m.base.size());
    for (int x = 0; x < m.size(); ++x) {
      PointMask minball = ball(m, OmegaElement::bottom(bs), x);
      for (unsigned a = 0; a < (1u << bs); ++a) {
        Bits b(bs);
        for (int i = 0; i < bs; ++i)
          if (a >> i & 1) b.set(i);
        CHECK((ball(m, OmegaElement::principal(bs, b), x) & minball) == minball);
      }
    }
  }
}
