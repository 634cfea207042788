#pragma once

// Bit-packed F2[x] arithmetic and the finite field F_{2^r} presented as
// F2[x]/<p> for a primitive p.  Supports r up to 30 without lookup tables;
// elements are masks with bit i = coefficient of x^i.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ru4::gf2 {

using Mask = uint64_t;

inline int deg(Mask f) { return f == 0 ? -1 : 63 - __builtin_clzll(f); }

inline Mask mul(Mask a, Mask b) {
  // carry-less schoolbook; operand degrees must sum below 64
  Mask r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

inline Mask mod(Mask a, Mask m) {
  int dm = deg(m);
  for (int d = deg(a); d >= dm; d = deg(a)) a ^= m << (d - dm);
  return a;
}

inline Mask mulmod(Mask a, Mask b, Mask m) { return mod(mul(a, b), m); }

inline Mask gcd(Mask a, Mask b) {
  while (b) {
    Mask t = mod(a, b);
    a = b;
    b = t;
  }
  return a;
}

inline Mask powmod(Mask base, uint64_t e, Mask m) {
  Mask r = mod(1, m);
  base = mod(base, m);
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

inline std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> ps;
  for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// Rabin's test: f of degree r is irreducible iff x^{2^r} = x mod f and
// gcd(x^{2^{r/q}} - x, f) = 1 for every prime q | r.
inline bool is_irreducible(Mask f) {
  int r = deg(f);
  if (r <= 0) return false;
  if ((f & 1) == 0) return f == 2;  // x divides f
  auto x_pow_pow2 = [&](int k) {
    Mask t = mod(2, f);  // x
    for (int i = 0; i < k; ++i) t = mulmod(t, t, f);
    return t;
  };
  if (x_pow_pow2(r) != mod(2, f)) return false;
  for (uint64_t q : prime_factors(static_cast<uint64_t>(r))) {
    Mask t = x_pow_pow2(static_cast<int>(r / q)) ^ 2;
    if (deg(gcd(f, mod(t, f))) > 0) return false;
  }
  return true;
}

// Multiplicative order of the class of x modulo an irreducible f.
inline uint64_t order_of_x(Mask f) {
  int r = deg(f);
  uint64_t group = (uint64_t{1} << r) - 1;
  uint64_t ord = group;
  for (uint64_t q : prime_factors(group))
    while (ord % q == 0 && powmod(2, ord / q, f) == 1) ord /= q;
  return ord;
}

inline bool is_primitive(Mask f) {
  if (!is_irreducible(f)) return false;
  return order_of_x(f) == (uint64_t{1} << deg(f)) - 1;
}

// Smallest primitive polynomial of degree r in mask order.
inline Mask find_primitive(int r) {
  if (r < 1 || r > 30) throw std::domain_error("gf2: extension degree out of range");
  if (r == 1) return 0b11;  // x + 1, the only choice over F2
  for (Mask f = (Mask{1} << r) | 1; f < (Mask{1} << (r + 1)); f += 2)
    if (is_irreducible(f) && order_of_x(f) == (uint64_t{1} << r) - 1) return f;
  throw std::logic_error("gf2: no primitive polynomial found");
}

// F_{2^r} with a primitive modulus; the class of x generates the unit group.
struct Field {
  int r;
  Mask modulus;

  explicit Field(int r_) : r(r_), modulus(find_primitive(r_)) {}
  Field(int r_, Mask m) : r(r_), modulus(m) {
    if (deg(m) != r_ || !is_irreducible(m))
      throw std::domain_error("gf2: modulus is not irreducible of the stated degree");
  }

  uint64_t group_order() const { return (uint64_t{1} << r) - 1; }
  Mask x() const { return mod(2, modulus); }
  Mask mul(Mask a, Mask b) const { return mulmod(a, b, modulus); }
  Mask pow(Mask a, uint64_t e) const { return powmod(a, e, modulus); }

  // An element of exact multiplicative order n (requires n | 2^r - 1 and a
  // primitive modulus).
  Mask element_of_order(uint64_t n) const {
    if (n == 0 || group_order() % n != 0)
      throw std::domain_error("gf2: order does not divide 2^r-1");
    Mask beta = pow(x(), group_order() / n);
    for (uint64_t q : prime_factors(n))
      if (pow(beta, n / q) == 1) throw std::logic_error("gf2: modulus is not primitive");
    return beta;
  }
};

}  // namespace ru4::gf2
