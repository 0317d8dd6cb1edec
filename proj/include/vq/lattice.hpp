#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vq/dyadic.hpp"

namespace vq {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Elem = int;
using ElemSet = std::vector<Elem>;

// A finite lattice given by its carrier and a full <= table. The table is
// validated at construction: partial order plus existence of all pairwise
// meets and joins (which for finite carriers yields meets and joins of
// every subset).
class FiniteLattice {
 public:
  FiniteLattice(std::vector<std::string> names, std::vector<std::vector<bool>> leq);

  int size() const { return int(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Elem x) const { return names_.at(x); }
  Elem index_of(const std::string& name) const;

  bool leq(Elem x, Elem y) const { return leq_[x][y]; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  // meet(emptyset) = top, join(emptyset) = bottom.
  Elem meet(const ElemSet& s) const;
  Elem join(const ElemSet& s) const;
  Elem meet2(Elem a, Elem b) const { return meet_[a][b]; }
  Elem join2(Elem a, Elem b) const { return join_[a][b]; }

  // y well above x, nonempty-S reading: y = top, or /\{s : s !<= y} !<= x.
  bool well_above(Elem y, Elem x) const;

  // Raney: every y is the meet of the elements well above it.
  bool completely_distributive() const;

  ElemSet positives() const;           // {a : a well above bottom}
  bool value_distributive() const;     // Raney + positives form a filter

  // Elements sorted top-down along a fixed linear extension of <=; used
  // wherever a deterministic "scan from the top" is needed.
  const ElemSet& descending_order() const { return descending_; }

  void check_element(Elem x) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<Elem>> meet_, join_;
  std::vector<Elem> wa_meet_;  // per y: meet of {s : s !<= y}; top if that set is empty
  Elem bottom_ = -1, top_ = -1;
  ElemSet descending_;
};

struct QuantaleDiagnosis {
  bool ok = true;
  std::string axiom;    // first violated axiom, empty when ok
  std::string witness;  // offending elements, printable
};

// Value quantale: a finite lattice with a monotone commutative monoid
// addition distributing over meets. The lattice part is validated at
// construction; the quantale axioms are reported by diagnose().
class ValueQuantale {
 public:
  ValueQuantale(FiniteLattice lattice, std::vector<std::vector<Elem>> plus);

  const FiniteLattice& lattice() const { return lattice_; }
  Elem plus(Elem a, Elem b) const { return plus_[a][b]; }
  Elem sum(const ElemSet& s) const;  // fold of +, empty sum = bottom

  int size() const { return lattice_.size(); }
  bool leq(Elem a, Elem b) const { return lattice_.leq(a, b); }
  Elem bottom() const { return lattice_.bottom(); }
  Elem top() const { return lattice_.top(); }
  bool well_above(Elem y, Elem x) const { return lattice_.well_above(y, x); }
  bool positive(Elem a) const { return lattice_.well_above(a, lattice_.bottom()); }
  const std::string& name(Elem x) const { return lattice_.name(x); }

  QuantaleDiagnosis diagnose() const;
  bool is_value_quantale() const { return diagnose().ok; }

 private:
  FiniteLattice lattice_;
  std::vector<std::vector<Elem>> plus_;
};

// delta_0 = eps, with delta_{i+1} + delta_{i+1} strictly under delta_i
// (well-above read right to left) and every delta_i positive.
struct DyadicScale {
  const ValueQuantale* quantale;
  Elem epsilon;
  ElemSet chain;  // chain[i] = delta_i, chain.size() = depth + 1
  int depth() const { return int(chain.size()) - 1; }
};

// Largest valid delta along the lattice's fixed top-down order with
// delta positive and eps well above delta + delta. Existence is Flagg's
// halving lemma; failure means the input is not a value quantale.
Elem half(const ValueQuantale& v, Elem eps);

DyadicScale dyadic_scale(const ValueQuantale& v, Elem eps, int depth);

// n * eps for a dyadic n in [0,1] whose denominator fits the scale depth:
// sum of the delta_i picked out by n's binary expansion.
Elem dyadic_multiple(const DyadicScale& scale, const Dyadic& n);

}  // namespace vq
