#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vq {

// Exact dyadic rational num / 2^exp, kept in lowest terms (num odd or zero).
// All arithmetic the library needs stays inside [0, small]; int64 is plenty.
struct Dyadic {
  std::int64_t num = 0;
  int exp = 0;  // denominator 2^exp, exp >= 0

  constexpr Dyadic() = default;
  Dyadic(std::int64_t n, int e) : num(n), exp(e) {
    if (e < 0) throw std::invalid_argument("dyadic: negative exponent");
    normalize();
  }
  static Dyadic zero() { return Dyadic(); }
  static Dyadic one() { return Dyadic(1, 0); }
  static Dyadic integer(std::int64_t n) { return Dyadic(n, 0); }

  void normalize() {
    if (num == 0) { exp = 0; return; }
    while (exp > 0 && num % 2 == 0) { num /= 2; --exp; }
  }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    int e = a.exp > b.exp ? a.exp : b.exp;
    std::int64_t an = a.num << (e - a.exp);
    std::int64_t bn = b.num << (e - b.exp);
    return Dyadic(an + bn, e);
  }
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) {
    int e = a.exp > b.exp ? a.exp : b.exp;
    return Dyadic((a.num << (e - a.exp)) - (b.num << (e - b.exp)), e);
  }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.num == b.num && a.exp == b.exp;
  }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
  friend bool operator<(const Dyadic& a, const Dyadic& b) {
    int e = a.exp > b.exp ? a.exp : b.exp;
    return (a.num << (e - a.exp)) < (b.num << (e - b.exp));
  }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return a < b || a == b; }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return b <= a; }

  bool is_zero() const { return num == 0; }

  std::string str() const {
    if (exp == 0) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(std::int64_t(1) << exp);
  }
};

inline Dyadic dyadic_min(const Dyadic& a, const Dyadic& b) { return a < b ? a : b; }
inline Dyadic dyadic_max(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }

// min(a + b, 1): the truncated sum used for [0,1]-valued generators.
inline Dyadic dyadic_sat_add(const Dyadic& a, const Dyadic& b) {
  Dyadic s = a + b;
  return s > Dyadic::one() ? Dyadic::one() : s;
}

}  // namespace vq
