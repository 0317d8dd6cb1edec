#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vq/lattice.hpp"

namespace vq {

// Subset of a finite base, as a packed bitset. Bases can get large for the
// walk-based constructions, so this is not a fixed-width mask.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int universe_size() const { return n_; }
  void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  static Bits full(int n) {
    Bits b(n);
    for (int i = 0; i < n; ++i) b.set(i);
    return b;
  }

  bool subset_of(const Bits& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  Bits intersect(const Bits& o) const {
    Bits r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }
  Bits unite(const Bits& o) const {
    Bits r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
  }
  int count() const {
    int c = 0;
    for (auto word : w_) c += __builtin_popcountll(word);
    return c;
  }
  bool none() const {
    for (auto word : w_) if (word) return false;
    return true;
  }
  friend bool operator==(const Bits& a, const Bits& b) { return a.n_ == b.n_ && a.w_ == b.w_; }
  friend bool operator<(const Bits& a, const Bits& b) { return a.w_ < b.w_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Element of Omega(S): a downward-closed family of finite subsets of the
// base S, represented by the antichain of its maximal sets. The empty
// generator list is the empty family (top, under reverse inclusion); the
// single generator S is the full family (bottom).
class OmegaElement {
 public:
  OmegaElement() = default;
  OmegaElement(int base_size, std::vector<Bits> generators);

  static OmegaElement top(int base_size) { return OmegaElement(base_size, {}); }
  static OmegaElement bottom(int base_size) {
    return OmegaElement(base_size, {Bits::full(base_size)});
  }
  static OmegaElement principal(int base_size, Bits a) {
    return OmegaElement(base_size, {std::move(a)});
  }

  int base_size() const { return base_; }
  const std::vector<Bits>& generators() const { return gens_; }
  bool is_top() const { return gens_.empty(); }
  bool is_bottom() const;
  bool principal_form() const { return gens_.size() == 1; }

  bool contains(const Bits& a) const;  // family membership
  Bits support() const;                // union of all generators

  friend bool operator==(const OmegaElement& a, const OmegaElement& b) {
    return a.base_ == b.base_ && a.gens_ == b.gens_;
  }
  friend bool operator!=(const OmegaElement& a, const OmegaElement& b) { return !(a == b); }

 private:
  int base_ = 0;
  std::vector<Bits> gens_;
};

// Reverse set inclusion: p <= q iff family(p) contains family(q).
bool omega_leq(const OmegaElement& p, const OmegaElement& q);
OmegaElement omega_meet(const std::vector<OmegaElement>& s, int base_size);
// + is family intersection; the join coincides with it.
OmegaElement omega_plus(const OmegaElement& p, const OmegaElement& q);

// Derived well-above test: p is top, or some generator-level set A in
// family(q) has family(p) inside its down-closure. Validated against the
// brute-force relation on fully enumerated Omega(base), |base| <= 2.
bool omega_well_above(const OmegaElement& p, const OmegaElement& q);

// All downward-closed families over a base of size <= 3, canonical form.
std::vector<OmegaElement> enumerate_omega(int base_size);

// The enumerated Omega(base) packaged as an explicit value quantale, with
// element names taken from the given base names.
ValueQuantale omega_as_quantale(const std::vector<std::string>& base_names, int max_base = 3);

std::string omega_str(const OmegaElement& p, const std::vector<std::string>& base_names);

}  // namespace vq
