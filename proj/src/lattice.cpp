#include "vq/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace vq {

namespace {

std::string pair_str(const FiniteLattice& l, Elem a, Elem b) {
  return l.name(a) + ", " + l.name(b);
}

}  // namespace

FiniteLattice::FiniteLattice(std::vector<std::string> names,
                             std::vector<std::vector<bool>> leq)
    : names_(std::move(names)), leq_(std::move(leq)) {
  const int n = size();
  if (n == 0) throw InputError("lattice: empty carrier");
  if (int(leq_.size()) != n)
    throw InputError("lattice: order table size mismatch");
  for (auto& row : leq_)
    if (int(row.size()) != n) throw InputError("lattice: order table size mismatch");

  for (int i = 0; i < n; ++i)
    if (!leq_[i][i]) throw InputError("lattice: order not reflexive at " + names_[i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && leq_[i][j] && leq_[j][i])
        throw InputError("lattice: order not antisymmetric at " + names_[i] + ", " + names_[j]);
      if (leq_[i][j])
        for (int k = 0; k < n; ++k)
          if (leq_[j][k] && !leq_[i][k])
            throw InputError("lattice: order not transitive at " + names_[i] + " <= " +
                             names_[j] + " <= " + names_[k]);
    }

  // Pairwise meets/joins must exist; with a finite carrier that gives all
  // subset meets/joins, including top and bottom.
  meet_.assign(n, std::vector<Elem>(n, -1));
  join_.assign(n, std::vector<Elem>(n, -1));
  auto bound = [&](Elem a, Elem b, bool lower) -> Elem {
    Elem best = -1;
    for (int z = 0; z < n; ++z) {
      bool is_bound = lower ? (leq_[z][a] && leq_[z][b]) : (leq_[a][z] && leq_[b][z]);
      if (!is_bound) continue;
      if (best == -1)
        best = z;
      else if (lower ? leq_[best][z] : leq_[z][best])
        best = z;
    }
    if (best == -1) return -1;
    // best must dominate every other bound, otherwise no extremum exists
    for (int z = 0; z < n; ++z) {
      bool is_bound = lower ? (leq_[z][a] && leq_[z][b]) : (leq_[a][z] && leq_[b][z]);
      if (is_bound && !(lower ? leq_[z][best] : leq_[best][z])) return -1;
    }
    return best;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      meet_[a][b] = bound(a, b, true);
      join_[a][b] = bound(a, b, false);
      if (meet_[a][b] == -1)
        throw InputError("lattice: no meet for " + pair_str(*this, a, b));
      if (join_[a][b] == -1)
        throw InputError("lattice: no join for " + pair_str(*this, a, b));
    }

  Elem bot = 0, top = 0;
  for (int i = 1; i < n; ++i) {
    bot = meet_[bot][i];
    top = join_[top][i];
  }
  bottom_ = bot;
  top_ = top;

  wa_meet_.assign(n, -1);
  for (int y = 0; y < n; ++y) {
    ElemSet not_below;
    for (int s = 0; s < n; ++s)
      if (!leq_[s][y]) not_below.push_back(s);
    wa_meet_[y] = not_below.empty() ? top_ : meet(not_below);
  }

  descending_.resize(n);
  std::iota(descending_.begin(), descending_.end(), 0);
  // stable topological sort, top first: sort by number of elements above
  std::stable_sort(descending_.begin(), descending_.end(), [&](Elem a, Elem b) {
    int ua = 0, ub = 0;
    for (int z = 0; z < n; ++z) {
      ua += leq_[a][z];
      ub += leq_[b][z];
    }
    return ua < ub;
  });
}

Elem FiniteLattice::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  throw InputError("unknown element identifier: " + name);
}

void FiniteLattice::check_element(Elem x) const {
  if (x < 0 || x >= size()) throw InputError("element index out of range");
}

Elem FiniteLattice::meet(const ElemSet& s) const {
  if (s.empty()) return top_;
  Elem acc = s[0];
  check_element(acc);
  for (size_t i = 1; i < s.size(); ++i) {
    check_element(s[i]);
    acc = meet_[acc][s[i]];
  }
  return acc;
}

Elem FiniteLattice::join(const ElemSet& s) const {
  if (s.empty()) return bottom_;
  Elem acc = s[0];
  check_element(acc);
  for (size_t i = 1; i < s.size(); ++i) {
    check_element(s[i]);
    acc = join_[acc][s[i]];
  }
  return acc;
}

bool FiniteLattice::well_above(Elem y, Elem x) const {
  check_element(y);
  check_element(x);
  if (y == top_) return true;
  return !leq_[wa_meet_[y]][x];
}

bool FiniteLattice::completely_distributive() const {
  for (int y = 0; y < size(); ++y) {
    ElemSet above;
    for (int a = 0; a < size(); ++a)
      if (well_above(a, y)) above.push_back(a);
    if (meet(above) != y) return false;
  }
  return true;
}

ElemSet FiniteLattice::positives() const {
  ElemSet out;
  for (int a = 0; a < size(); ++a)
    if (well_above(a, bottom_)) out.push_back(a);
  return out;
}

bool FiniteLattice::value_distributive() const {
  if (!completely_distributive()) return false;
  ElemSet pos = positives();
  if (pos.empty()) return false;
  std::vector<bool> in(size(), false);
  for (Elem p : pos) in[p] = true;
  for (Elem p : pos) {
    for (int z = 0; z < size(); ++z)
      if (leq_[p][z] && !in[z]) return false;  // upward closed
    for (Elem q : pos)
      if (!in[meet_[p][q]]) return false;  // closed under binary meets
  }
  return true;
}

ValueQuantale::ValueQuantale(FiniteLattice lattice, std::vector<std::vector<Elem>> plus)
    : lattice_(std::move(lattice)), plus_(std::move(plus)) {
  const int n = lattice_.size();
  if (int(plus_.size()) != n) throw InputError("quantale: addition table size mismatch");
  for (auto& row : plus_) {
    if (int(row.size()) != n) throw InputError("quantale: addition table size mismatch");
    for (Elem e : row)
      if (e < 0 || e >= n) throw InputError("quantale: addition table entry out of range");
  }
}

Elem ValueQuantale::sum(const ElemSet& s) const {
  Elem acc = bottom();
  for (Elem e : s) acc = plus(acc, e);
  return acc;
}

QuantaleDiagnosis ValueQuantale::diagnose() const {
  const int n = size();
  const auto& l = lattice_;
  auto bad = [&](const std::string& axiom, const std::string& witness) {
    return QuantaleDiagnosis{false, axiom, witness};
  };
  if (!l.completely_distributive()) return bad("completely distributive", "Raney check failed");
  if (!l.value_distributive()) return bad("positives form a filter", "");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (plus_[a][b] != plus_[b][a])
        return bad("commutativity", pair_str(l, a, b));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (plus_[plus_[a][b]][c] != plus_[a][plus_[b][c]])
          return bad("associativity", pair_str(l, a, b) + ", " + l.name(c));
  for (int a = 0; a < n; ++a)
    if (plus_[a][l.bottom()] != a) return bad("x + bottom = x", l.name(a));
  // x + /\S = /\(x + S) for every nonempty S; with a finite carrier the
  // binary case generates the general one, which tests cross-check against
  // a full subset sweep on small lattices.
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (plus_[x][l.meet2(a, b)] != l.meet2(plus_[x][a], plus_[x][b]))
          return bad("+ distributes over meets", l.name(x) + " + (" + pair_str(l, a, b) + ")");
  return {};
}

Elem half(const ValueQuantale& v, Elem eps) {
  if (!v.positive(eps)) throw InputError("half: eps must be positive");
  for (Elem d : v.lattice().descending_order()) {
    if (!v.positive(d)) continue;
    if (v.well_above(eps, v.plus(d, d))) return d;
  }
  throw InputError("half: no valid delta, not a value quantale");
}

DyadicScale dyadic_scale(const ValueQuantale& v, Elem eps, int depth) {
  if (!v.positive(eps)) throw InputError("dyadic_scale: eps must be positive");
  if (depth < 0) throw InputError("dyadic_scale: negative depth");
  DyadicScale s{&v, eps, {eps}};
  for (int i = 0; i < depth; ++i) s.chain.push_back(half(v, s.chain.back()));
  return s;
}

Elem dyadic_multiple(const DyadicScale& scale, const Dyadic& n) {
  if (n < Dyadic::zero() || n > Dyadic::one())
    throw InputError("dyadic_multiple: n outside [0,1]");
  if (n.exp > scale.depth())
    throw InputError("dyadic_multiple: denominator exceeds scale depth");
  // binary expansion of n: bit i set  =>  delta_i contributes
  ElemSet terms;
  std::int64_t num = n.num << (scale.depth() - n.exp);  // n = num / 2^depth
  for (int i = 0; i <= scale.depth(); ++i) {
    std::int64_t bit = std::int64_t(1) << (scale.depth() - i);
    if (num >= bit) {
      num -= bit;
      terms.push_back(scale.chain[i]);
    }
  }
  return scale.quantale->sum(terms);
}

}  // namespace vq
