#include "doctest.h"

#include "corpus.hpp"

using namespace vq;
using namespace vqtest;

namespace {

Bits bits_of(int base, std::initializer_list<int> xs) {
  Bits b(base);
  for (int x : xs) b.set(x);
  return b;
}

// Independent count of downward-closed families: filter all subsets of the
// powerset directly, without the canonical-form machinery.
int brute_count_downsets(int base) {
  const int nsub = 1 << base;
  int count = 0;
  for (unsigned fam = 0; fam < (1u << nsub); ++fam) {
    bool down = true;
    for (int a = 0; a < nsub && down; ++a)
      if (fam >> a & 1)
        for (int b = 0; b < nsub; ++b)
          if ((b & ~a) == 0 && !(fam >> b & 1)) { down = false; break; }
    if (down) ++count;
  }
  return count;
}

unsigned family_mask(const OmegaElement& p) {
  const int nsub = 1 << p.base_size();
  unsigned fam = 0;
  for (int a = 0; a < nsub; ++a) {
    Bits s(p.base_size());
    for (int i = 0; i < p.base_size(); ++i)
      if (a >> i & 1) s.set(i);
    if (p.contains(s)) fam |= 1u << a;
  }
  return fam;
}

}  // namespace

TEST_CASE("canonical form") {
  // down-closure of {u} presented with junk generators
  OmegaElement p(2, {bits_of(2, {0}), bits_of(2, {}), bits_of(2, {0})});
  CHECK(p.generators().size() == 1);
  CHECK(p.generators()[0] == bits_of(2, {0}));
  CHECK(OmegaElement::top(2).is_top());
  CHECK(OmegaElement::bottom(2).is_bottom());
  CHECK(p.contains(bits_of(2, {})));
  CHECK_FALSE(p.contains(bits_of(2, {1})));
}

TEST_CASE("omega order, meet, plus") {
  const int b = 2;
  OmegaElement du = OmegaElement::principal(b, bits_of(b, {0}));
  OmegaElement duv = OmegaElement::bottom(b);
  // absorption: {u} inside {u,v}
  CHECK(omega_plus(du, duv) == du);
  // meet keeps both generators rather than collapsing to the full family
  OmegaElement dv = OmegaElement::principal(b, bits_of(b, {1}));
  OmegaElement m = omega_meet({du, dv}, b);
  CHECK(m.generators().size() == 2);
  CHECK(m != duv);
  CHECK(omega_leq(m, du));
  CHECK(omega_leq(m, dv));
  // x + bottom = x for every enumerated element
  for (auto& p : enumerate_omega(b)) CHECK(omega_plus(p, OmegaElement::bottom(b)) == p);
  CHECK_THROWS_AS(omega_plus(du, OmegaElement::top(3)), InputError);
}

TEST_CASE("omega well-above examples") {
  const int b = 2;
  OmegaElement du = OmegaElement::principal(b, bits_of(b, {0}));
  OmegaElement duv = OmegaElement::bottom(b);
  CHECK(omega_well_above(du, duv));  // every finite family is above bottom
  CHECK_FALSE(omega_well_above(duv, du));
  CHECK(omega_well_above(du, du));
}

TEST_CASE("enumerate_omega counts") {
  CHECK(enumerate_omega(0).size() == 2);
  CHECK(enumerate_omega(1).size() == 3);
  CHECK(int(enumerate_omega(2).size()) == brute_count_downsets(2));
  CHECK(enumerate_omega(2).size() == 6);
  CHECK(int(enumerate_omega(3).size()) == brute_count_downsets(3));
  CHECK(enumerate_omega(3).size() == 20);
  CHECK_THROWS_AS(enumerate_omega(4), InputError);
}

TEST_CASE("enumerated Omega(base) is a value quantale, |base| <= 2") {
  for (int bs = 0; bs <= 2; ++bs) {
    std::vector<std::string> base_names;
    for (int i = 0; i < bs; ++i) base_names.push_back(std::string(1, char('u' + i)));
    ValueQuantale q = omega_as_quantale(base_names);
    CAPTURE(bs);
    CHECK(q.diagnose().ok);
    CHECK(brute_meet_distributivity(q));
  }
}

TEST_CASE("derived well-above criterion equals the lattice relation") {
  // The gate for everything downstream that leans on the symbolic test.
  for (int bs = 0; bs <= 2; ++bs) {
    std::vector<std::string> base_names;
    for (int i = 0; i < bs; ++i) base_names.push_back(std::string(1, char('u' + i)));
    ValueQuantale q = omega_as_quantale(base_names);
    std::vector<OmegaElement> elems = enumerate_omega(bs);
    for (auto& p : elems)
      for (auto& r : elems) {
        Elem qi = q.lattice().index_of(omega_str(p, base_names));
        Elem qj = q.lattice().index_of(omega_str(r, base_names));
        bool sym = omega_well_above(p, r);
        bool lat = q.well_above(qi, qj);
        bool brute = brute_well_above(q.lattice(), qi, qj);
        CAPTURE(omega_str(p, base_names));
        CAPTURE(omega_str(r, base_names));
        CHECK(sym == lat);
        CHECK(lat == brute);
      }
  }
}

TEST_CASE("p is well above bottom for every representable p") {
  for (int bs = 1; bs <= 3; ++bs)
    for (auto& p : enumerate_omega(bs))
      CHECK(omega_well_above(p, OmegaElement::bottom(bs)));
}

TEST_CASE("omega_leq is reverse family inclusion, brute force") {
  auto elems = enumerate_omega(2);
  for (auto& p : elems)
    for (auto& q : elems)
      CHECK(omega_leq(p, q) == ((family_mask(q) & ~family_mask(p)) == 0));
}

TEST_CASE("plus is family intersection, brute force") {
  auto elems = enumerate_omega(2);
  for (auto& p : elems)
    for (auto& q : elems)
      CHECK(family_mask(omega_plus(p, q)) == (family_mask(p) & family_mask(q)));
}

TEST_CASE("meet is family union, brute force") {
  auto elems = enumerate_omega(2);
  for (auto& p : elems)
    for (auto& q : elems)
      CHECK(family_mask(omega_meet({p, q}, 2)) == (family_mask(p) | family_mask(q)));
}
