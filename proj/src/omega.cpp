#include "vq/omega.hpp"

#include <algorithm>
#include <map>

namespace vq {

OmegaElement::OmegaElement(int base_size, std::vector<Bits> generators)
    : base_(base_size), gens_(std::move(generators)) {
  for (auto& g : gens_)
    if (g.universe_size() != base_)
      throw InputError("omega: generator over wrong base");
  // canonical form: maximal sets only, sorted
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  std::vector<Bits> keep;
  for (size_t i = 0; i < gens_.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < gens_.size() && !dominated; ++j)
      if (i != j && gens_[i].subset_of(gens_[j])) dominated = true;
    if (!dominated) keep.push_back(gens_[i]);
  }
  gens_ = std::move(keep);
}

bool OmegaElement::is_bottom() const {
  return gens_.size() == 1 && gens_[0] == Bits::full(base_);
}

bool OmegaElement::contains(const Bits& a) const {
  for (auto& g : gens_)
    if (a.subset_of(g)) return true;
  return false;
}

Bits OmegaElement::support() const {
  Bits u(base_);
  for (auto& g : gens_) u = u.unite(g);
  return u;
}

bool omega_leq(const OmegaElement& p, const OmegaElement& q) {
  if (p.base_size() != q.base_size()) throw InputError("omega: base mismatch");
  // family(p) >= family(q): every generator of q lies in some generator of p
  for (auto& b : q.generators())
    if (!p.contains(b)) return false;
  return true;
}

OmegaElement omega_meet(const std::vector<OmegaElement>& s, int base_size) {
  std::vector<Bits> gens;
  for (auto& e : s) {
    if (e.base_size() != base_size) throw InputError("omega: base mismatch");
    for (auto& g : e.generators()) gens.push_back(g);
  }
  return OmegaElement(base_size, std::move(gens));
}

OmegaElement omega_plus(const OmegaElement& p, const OmegaElement& q) {
  if (p.base_size() != q.base_size()) throw InputError("omega: base mismatch");
  std::vector<Bits> gens;
  for (auto& a : p.generators())
    for (auto& b : q.generators()) gens.push_back(a.intersect(b));
  return OmegaElement(p.base_size(), std::move(gens));
}

bool omega_well_above(const OmegaElement& p, const OmegaElement& q) {
  if (p.base_size() != q.base_size()) throw InputError("omega: base mismatch");
  // top is well above everything under the nonempty-S convention
  if (p.is_top()) return true;
  for (auto& a : q.generators()) {
    bool all_inside = true;
    for (auto& g : p.generators())
      if (!g.subset_of(a)) { all_inside = false; break; }
    if (all_inside) return true;
  }
  return false;
}

std::vector<OmegaElement> enumerate_omega(int base_size) {
  if (base_size < 0 || base_size > 3)
    throw InputError("enumerate_omega: base size limited to 3");
  const int nsub = 1 << base_size;
  std::vector<OmegaElement> out;
  for (unsigned fam = 0; fam < (1u << nsub); ++fam) {
    // downward closure check: every subset of a member is a member
    bool down = true;
    for (int a = 0; a < nsub && down; ++a) {
      if (!(fam >> a & 1)) continue;
      for (int b = a; ; b = (b - 1) & a) {
        if (!(fam >> b & 1)) { down = false; break; }
        if (b == 0) break;
      }
    }
    if (!down) continue;
    std::vector<Bits> gens;
    for (int a = 0; a < nsub; ++a) {
      if (!(fam >> a & 1)) continue;
      Bits g(base_size);
      for (int i = 0; i < base_size; ++i)
        if (a >> i & 1) g.set(i);
      gens.push_back(g);
    }
    out.push_back(OmegaElement(base_size, std::move(gens)));
  }
  return out;
}

ValueQuantale omega_as_quantale(const std::vector<std::string>& base_names, int max_base) {
  const int bs = int(base_names.size());
  if (bs > max_base) throw InputError("omega_as_quantale: base too large");
  std::vector<OmegaElement> elems = enumerate_omega(bs);
  const int n = int(elems.size());

  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = omega_str(elems[i], base_names);

  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) leq[i][j] = omega_leq(elems[i], elems[j]);
  FiniteLattice lat(names, leq);

  auto find = [&](const OmegaElement& e) {
    for (int i = 0; i < n; ++i)
      if (elems[i] == e) return i;
    throw InputError("omega_as_quantale: closure escaped enumeration");
  };
  std::vector<std::vector<Elem>> plus(n, std::vector<Elem>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) plus[i][j] = find(omega_plus(elems[i], elems[j]));
  return ValueQuantale(std::move(lat), std::move(plus));
}

std::string omega_str(const OmegaElement& p, const std::vector<std::string>& base_names) {
  if (p.is_top()) return "{}";
  std::string out;
  for (auto& g : p.generators()) {
    if (!out.empty()) out += "+";
    out += "v{";
    bool first = true;
    for (int i = 0; i < p.base_size(); ++i)
      if (g.test(i)) {
        if (!first) out += ",";
        out += i < int(base_names.size()) ? base_names[i] : std::to_string(i);
        first = false;
      }
    out += "}";
  }
  return out;
}

}  // namespace vq
