#pragma once

// Polynomial arithmetic over F2, Z4 and R; residue arithmetic mod x^n - 1;
// projections, regularity, monic associates, division by regular
// polynomials, Bezout lifting and reciprocals.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ru4/ring.hpp"

namespace ru4 {

// Dense coefficient sequence, index = degree, trailing zeros stripped.
// degree() of the zero polynomial is -1, standing in for "minus infinity".
template <class T>
struct Poly {
  std::vector<T> c;

  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { normalize(); }

  static Poly zero() { return Poly{}; }
  static Poly one() { return constant(T::one()); }
  static Poly constant(T v) {
    Poly p;
    p.c.push_back(v);
    p.normalize();
    return p;
  }
  static Poly monomial(int deg, T coeff) {
    Poly p;
    p.c.assign(static_cast<size_t>(deg) + 1, T::zero());
    p.c.back() = coeff;
    p.normalize();
    return p;
  }
  // x^n - 1
  static Poly xn_minus_1(int n) {
    Poly p;
    p.c.assign(static_cast<size_t>(n) + 1, T::zero());
    p.c[0] = -T::one();
    p.c.back() = T::one();
    return p;
  }

  void normalize() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  T at(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<size_t>(i)] : T::zero();
  }
  T lead() const { return c.empty() ? T::zero() : c.back(); }
  bool is_monic() const { return !c.empty() && c.back() == T::one(); }

  friend bool operator==(const Poly& f, const Poly& g) { return f.c == g.c; }

  friend Poly operator+(const Poly& f, const Poly& g) {
    Poly r;
    r.c.assign(std::max(f.c.size(), g.c.size()), T::zero());
    for (size_t i = 0; i < f.c.size(); ++i) r.c[i] = r.c[i] + f.c[i];
    for (size_t i = 0; i < g.c.size(); ++i) r.c[i] = r.c[i] + g.c[i];
    r.normalize();
    return r;
  }
  friend Poly operator-(const Poly& f, const Poly& g) { return f + (-g); }
  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }
  friend Poly operator*(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Poly{};
    Poly r;
    r.c.assign(f.c.size() + g.c.size() - 1, T::zero());
    for (size_t i = 0; i < f.c.size(); ++i)
      for (size_t j = 0; j < g.c.size(); ++j) r.c[i + j] = r.c[i + j] + f.c[i] * g.c[j];
    r.normalize();
    return r;
  }
  Poly scaled(T s) const {
    Poly r = *this;
    for (auto& x : r.c) x = x * s;
    r.normalize();
    return r;
  }
  Poly shifted_up(int k) const {
    if (is_zero()) return *this;
    Poly r;
    r.c.assign(c.size() + static_cast<size_t>(k), T::zero());
    std::copy(c.begin(), c.end(), r.c.begin() + k);
    return r;
  }

  // Division by a monic divisor; exact in any coefficient ring.
  std::pair<Poly, Poly> divmod_monic(const Poly& g) const {
    if (!g.is_monic()) throw std::domain_error("divmod_monic: divisor not monic");
    Poly q, r = *this;
    int dg = g.degree();
    if (r.degree() >= dg) q.c.assign(static_cast<size_t>(r.degree() - dg) + 1, T::zero());
    while (r.degree() >= dg) {
      int shift = r.degree() - dg;
      T coef = r.lead();
      q.c[static_cast<size_t>(shift)] = coef;
      for (int i = 0; i <= dg; ++i)
        r.c[static_cast<size_t>(i + shift)] = r.at(i + shift) - coef * g.at(i);
      r.normalize();
    }
    q.normalize();
    return {q, r};
  }
};

using PolyF2 = Poly<F2>;
using PolyZ4 = Poly<Z4>;
using PolyR = Poly<RingElement>;

// --- projections -----------------------------------------------------------

inline PolyZ4 poly_mod_u(const PolyR& f) {
  std::vector<Z4> c;
  c.reserve(f.c.size());
  for (auto x : f.c) c.push_back(x.a);
  return PolyZ4{std::move(c)};
}

inline PolyF2 poly_mod_maximal(const PolyR& f) {
  std::vector<F2> c;
  c.reserve(f.c.size());
  for (auto x : f.c) c.push_back(F2{x.f2_bit()});
  return PolyF2{std::move(c)};
}

inline PolyF2 poly_mod_maximal(const PolyZ4& f) {
  std::vector<F2> c;
  c.reserve(f.c.size());
  for (auto x : f.c) c.push_back(F2{x.f2_bit()});
  return PolyF2{std::move(c)};
}

inline PolyZ4 lift_to_z4(const PolyF2& f) {
  std::vector<Z4> c;
  c.reserve(f.c.size());
  for (auto x : f.c) c.push_back(Z4{x.v});
  return PolyZ4{std::move(c)};
}

inline PolyR lift_to_r(const PolyZ4& f) {
  std::vector<RingElement> c;
  c.reserve(f.c.size());
  for (auto x : f.c) c.push_back(RingElement{x, Z4::zero()});
  return PolyR{std::move(c)};
}

inline PolyR lift_to_r(const PolyF2& f) { return lift_to_r(lift_to_z4(f)); }

// 0/1 lift of the residue image; monic of degree = top unit coefficient.
template <class T>
Poly<T> f2_section(const Poly<T>& f) {
  std::vector<T> c;
  c.reserve(f.c.size());
  for (auto x : f.c) c.push_back(T::from_f2_bit(x.f2_bit()));
  return Poly<T>{std::move(c)};
}

template <class T>
bool is_regular(const Poly<T>& f) {
  for (auto x : f.c)
    if (x.f2_bit()) return true;
  return false;
}

// --- monic associates and division -----------------------------------------

template <class T>
struct MonicAssociate {
  Poly<T> unit;   // v, a unit of the polynomial ring
  Poly<T> monic;  // f*, with f = v * f*
};

// Inverse of a unit polynomial (unit constant term, nilpotent higher
// coefficients).  The geometric series terminates because the maximal ideal
// is nilpotent: <2,u>^3 = 0 in R, <2>^2 = 0 in Z4.
template <class T>
Poly<T> invert_unit_poly(const Poly<T>& w) {
  if (w.is_zero() || !w.at(0).is_unit())
    throw std::domain_error("invert_unit_poly: constant term is not a unit");
  T w0inv = w.at(0).inv();
  Poly<T> t = w.scaled(w0inv) - Poly<T>::one();
  Poly<T> acc = Poly<T>::one();
  Poly<T> term = Poly<T>::one();
  for (int k = 0; k < 8 && !term.is_zero(); ++k) {
    term = -(term * t);
    acc = acc + term;
  }
  if (!term.is_zero()) throw std::logic_error("invert_unit_poly: series did not terminate");
  Poly<T> v = acc.scaled(w0inv);
  if (!(v * w == Poly<T>::one())) throw std::logic_error("invert_unit_poly: verification failed");
  return v;
}

// Weierstrass-style fixed point: find a unit polynomial w with w*f monic of
// degree d = top unit-coefficient index.  Each pass pushes the defect one
// step down the <2,u>-adic filtration, so at most three passes are needed.
template <class T>
MonicAssociate<T> monic_associate(const Poly<T>& f) {
  if (!is_regular(f)) throw std::domain_error("monic_associate: polynomial is not regular");
  int d = -1;
  for (int i = 0; i <= f.degree(); ++i)
    if (f.at(i).is_unit()) d = i;
  Poly<T> fhat = f2_section(f);  // monic of degree d
  Poly<T> w = Poly<T>::constant(f.at(d).inv());
  for (int pass = 0; pass < 4; ++pass) {
    Poly<T> h = w * f;
    Poly<T> defect;
    defect.c.assign(h.c.size(), T::zero());
    for (int i = d + 1; i <= h.degree(); ++i) defect.c[static_cast<size_t>(i)] = h.at(i);
    defect.c[static_cast<size_t>(d)] = h.at(d) - T::one();
    defect.normalize();
    if (defect.is_zero()) break;
    auto [delta, rem] = defect.divmod_monic(fhat);
    (void)rem;
    w = w - delta;
  }
  Poly<T> fstar = w * f;
  fstar.c.resize(static_cast<size_t>(d) + 1);  // exact by construction
  fstar.normalize();
  Poly<T> v = invert_unit_poly(w);
  MonicAssociate<T> out{v, fstar};
  if (!(out.unit * out.monic == f) || !out.monic.is_monic())
    throw std::logic_error("monic_associate: verification failed");
  return out;
}

// f = g q + r with deg r < deg g, for regular g; division goes through the
// monic associate as in the classical proof.
template <class T>
std::pair<Poly<T>, Poly<T>> poly_divmod(const Poly<T>& f, const Poly<T>& g) {
  if (!is_regular(g)) throw std::domain_error("poly_divmod: divisor is not regular");
  auto ma = monic_associate(g);
  auto [q1, r] = f.divmod_monic(ma.monic);
  Poly<T> q = q1 * invert_unit_poly(ma.unit);
  return {q, r};
}

template <class T>
bool divides(const Poly<T>& g, const Poly<T>& f) {
  if (g.is_zero()) return f.is_zero();
  if (!is_regular(g)) {
    // Divisibility by a non-regular divisor is only decided in the cases the
    // library produces: 2*F0 with F0 regular (over Z4 coefficients).
    throw std::domain_error("divides: non-regular divisor");
  }
  return poly_divmod(f, g).second.is_zero();
}

// --- F2 extended Euclid and the Bezout lift ---------------------------------

inline std::pair<PolyF2, PolyF2> f2_divmod(const PolyF2& f, const PolyF2& g) {
  if (g.is_zero()) throw std::domain_error("f2_divmod: division by zero");
  return f.divmod_monic(g);  // nonzero F2 polynomials are monic
}

// gcd plus cofactors: a f + b g = gcd.
inline void f2_ext_gcd(const PolyF2& f, const PolyF2& g, PolyF2& gcd, PolyF2& a, PolyF2& b) {
  PolyF2 r0 = f, r1 = g;
  PolyF2 s0 = PolyF2::one(), s1 = PolyF2::zero();
  PolyF2 t0 = PolyF2::zero(), t1 = PolyF2::one();
  while (!r1.is_zero()) {
    auto [q, r2] = f2_divmod(r0, r1);
    PolyF2 s2 = s0 - q * s1;
    PolyF2 t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  gcd = r0;
  a = s0;
  b = t0;
}

template <class T>
Poly<T> lift_from_f2(const PolyF2& f) {
  std::vector<T> c;
  c.reserve(f.c.size());
  for (auto x : f.c) c.push_back(T::from_f2_bit(x.v));
  return Poly<T>{std::move(c)};
}

// If the images of f and g mod <2,u> are coprime over F2, produce A, B with
// A f + B g = 1 exactly: lift the F2 cofactors, then divide by 1 + t where
// t = A0 f + B0 g - 1 is nilpotent (t^3 = 0 since <2,u>^3 = 0).
template <class T>
std::optional<std::pair<Poly<T>, Poly<T>>> bezout_lift(const Poly<T>& f, const Poly<T>& g) {
  PolyF2 fbar = poly_mod_maximal(f), gbar = poly_mod_maximal(g);
  PolyF2 gcd, abar, bbar;
  f2_ext_gcd(fbar, gbar, gcd, abar, bbar);
  if (!(gcd == PolyF2::one())) return std::nullopt;
  Poly<T> A0 = lift_from_f2<T>(abar);
  Poly<T> B0 = lift_from_f2<T>(bbar);
  Poly<T> t = A0 * f + B0 * g - Poly<T>::one();
  Poly<T> inv = Poly<T>::one();
  Poly<T> term = Poly<T>::one();
  for (int k = 0; k < 8 && !term.is_zero(); ++k) {
    term = -(term * t);
    inv = inv + term;
  }
  if (!term.is_zero()) throw std::logic_error("bezout_lift: nilpotency bound exceeded");
  Poly<T> A = A0 * inv, B = B0 * inv;
  if (!(A * f + B * g == Poly<T>::one())) throw std::logic_error("bezout_lift: verification failed");
  return std::make_pair(A, B);
}

// Plain reciprocal: coefficient sequence reversed.
template <class T>
Poly<T> reciprocal(const Poly<T>& f) {
  Poly<T> r;
  r.c.assign(f.c.rbegin(), f.c.rend());
  r.normalize();
  return r;
}

// --- residue ring (base)[x] / <x^n - 1> -------------------------------------

template <class T>
struct CyclicPoly {
  int n = 1;
  std::vector<T> c;  // exactly n coefficients

  CyclicPoly() : c(1, T::zero()) {}
  explicit CyclicPoly(int n_) : n(n_), c(static_cast<size_t>(n_), T::zero()) {}
  CyclicPoly(int n_, const Poly<T>& f) : n(n_), c(static_cast<size_t>(n_), T::zero()) {
    for (int i = 0; i <= f.degree(); ++i) {
      size_t k = static_cast<size_t>(i % n_);
      c[k] = c[k] + f.at(i);
    }
  }

  static CyclicPoly one(int n_) { return CyclicPoly(n_, Poly<T>::one()); }

  bool is_zero() const {
    for (auto x : c)
      if (!x.is_zero()) return false;
    return true;
  }
  Poly<T> to_poly() const { return Poly<T>{c}; }

  friend bool operator==(const CyclicPoly& f, const CyclicPoly& g) {
    return f.n == g.n && f.c == g.c;
  }
  friend CyclicPoly operator+(const CyclicPoly& f, const CyclicPoly& g) {
    CyclicPoly r(f.n);
    for (int i = 0; i < f.n; ++i) r.c[i] = f.c[i] + g.c[i];
    return r;
  }
  friend CyclicPoly operator-(const CyclicPoly& f, const CyclicPoly& g) {
    CyclicPoly r(f.n);
    for (int i = 0; i < f.n; ++i) r.c[i] = f.c[i] - g.c[i];
    return r;
  }
  friend CyclicPoly operator*(const CyclicPoly& f, const CyclicPoly& g) {
    CyclicPoly r(f.n);
    for (int i = 0; i < f.n; ++i) {
      if (f.c[i].is_zero()) continue;
      for (int j = 0; j < f.n; ++j)
        r.c[(i + j) % f.n] = r.c[(i + j) % f.n] + f.c[i] * g.c[j];
    }
    return r;
  }
  CyclicPoly scaled(T s) const {
    CyclicPoly r(n);
    for (int i = 0; i < n; ++i) r.c[i] = c[i] * s;
    return r;
  }
  // Multiplication by x^k: the cyclic shift tau^k.
  CyclicPoly shifted(int k) const {
    CyclicPoly r(n);
    k = ((k % n) + n) % n;
    for (int i = 0; i < n; ++i) r.c[(i + k) % n] = c[i];
    return r;
  }
  // x -> x^{-1} on residues: exponent negation mod n.
  CyclicPoly reciprocal() const {
    CyclicPoly r(n);
    for (int i = 0; i < n; ++i) r.c[(n - i) % n] = c[i];
    return r;
  }
};

using CyclicPolyZ4 = CyclicPoly<Z4>;
using CyclicPolyR = CyclicPoly<RingElement>;

inline CyclicPolyZ4 cyclic_mod_u(const CyclicPolyR& f) {
  CyclicPolyZ4 r(f.n);
  for (int i = 0; i < f.n; ++i) r.c[i] = f.c[i].a;
  return r;
}

inline CyclicPolyR cyclic_lift_to_r(const CyclicPolyZ4& f) {
  CyclicPolyR r(f.n);
  for (int i = 0; i < f.n; ++i) r.c[i] = RingElement{f.c[i], Z4::zero()};
  return r;
}

inline CyclicPolyR cyclic_times_u(const CyclicPolyR& f) {
  CyclicPolyR r(f.n);
  for (int i = 0; i < f.n; ++i) r.c[i] = RingElement::u() * f.c[i];
  return r;
}

// --- parsing and printing ---------------------------------------------------

namespace detail {

inline std::string coeff_str(RingElement x, bool paper_style) {
  auto num = [&](Z4 v) {
    if (paper_style && v.v == 3) return std::string("-1");
    return std::to_string(v.v);
  };
  if (x.b.is_zero()) return num(x.a);
  std::string up = x.b.v == 1 ? "u" : num(x.b) + "u";
  if (x.a.is_zero()) return up;
  return num(x.a) + "+" + up;
}

}  // namespace detail

// Caret powers, R coefficients in canonical form: "x^3+2x^2+x+3",
// "(1+u)x+1", "3ux^2".  With paper_style, a 3 prints as -1.
inline std::string to_string(const PolyR& f, bool paper_style = false) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int d = f.degree(); d >= 0; --d) {
    RingElement x = f.at(d);
    if (x.is_zero()) continue;
    std::string cs = detail::coeff_str(x, paper_style);
    std::string term;
    if (d == 0) {
      term = cs;
    } else {
      bool mixed = !x.a.is_zero() && !x.b.is_zero();
      std::string base = d == 1 ? "x" : "x^" + std::to_string(d);
      if (cs == "1")
        term = base;
      else if (mixed)
        term = "(" + cs + ")" + base;
      else
        term = cs + base;
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

inline std::string to_string(const PolyZ4& f, bool paper_style = false) {
  return to_string(lift_to_r(f), paper_style);
}

inline std::string to_string(const PolyF2& f, bool = false) {
  return to_string(lift_to_r(f), false);
}

// Accepts "-" signs and normalizes mod 4; "x-1" parses as x+3.
inline PolyR parse_poly_r(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s.push_back(ch);
  if (s.empty()) throw ParseError("empty polynomial");
  std::vector<RingElement> acc;
  auto add_term = [&](RingElement coeff, int deg) {
    if (deg >= static_cast<int>(acc.size())) acc.resize(static_cast<size_t>(deg) + 1);
    acc[static_cast<size_t>(deg)] = acc[static_cast<size_t>(deg)] + coeff;
  };
  size_t pos = 0;
  while (pos < s.size()) {
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
      neg = s[pos] == '-';
      ++pos;
      if (pos >= s.size()) throw ParseError("dangling sign in '" + text + "'");
    }
    RingElement coeff = RingElement::one();
    bool have_coeff = false;
    if (s[pos] == '(') {
      size_t close = s.find(')', pos);
      if (close == std::string::npos) throw ParseError("unbalanced '(' in '" + text + "'");
      coeff = parse_element(s.substr(pos + 1, close - pos - 1));
      have_coeff = true;
      pos = close + 1;
    } else {
      long long val = 0;
      bool digits = false;
      while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
        val = val * 10 + (s[pos] - '0');
        digits = true;
        ++pos;
      }
      bool has_u = pos < s.size() && s[pos] == 'u';
      if (has_u) ++pos;
      if (digits || has_u) {
        have_coeff = true;
        Z4 v = Z4::from_int(digits ? val : 1);
        coeff = has_u ? RingElement{Z4::zero(), v} : RingElement{v, Z4::zero()};
      }
    }
    int deg = 0;
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      deg = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        long long e = 0;
        bool digits = false;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
          e = e * 10 + (s[pos] - '0');
          digits = true;
          ++pos;
        }
        if (!digits) throw ParseError("missing exponent in '" + text + "'");
        deg = static_cast<int>(e);
      }
    } else if (!have_coeff) {
      throw ParseError("bad term in '" + text + "'");
    }
    add_term(neg ? -coeff : coeff, deg);
  }
  return PolyR{std::move(acc)};
}

inline PolyZ4 parse_poly_z4(const std::string& text) {
  PolyR f = parse_poly_r(text);
  for (auto x : f.c)
    if (!x.b.is_zero()) throw ParseError("u-coefficient in Z4 polynomial '" + text + "'");
  return poly_mod_u(f);
}

inline PolyF2 parse_poly_f2(const std::string& text) {
  PolyR f = parse_poly_r(text);
  for (auto x : f.c)
    if (!x.b.is_zero()) throw ParseError("u-coefficient in F2 polynomial '" + text + "'");
  return poly_mod_maximal(f);
}

}  // namespace ru4
