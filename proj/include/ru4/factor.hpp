#pragma once

// Factorization of x^n - 1 (n odd) over F2 via cyclotomic cosets, Graeffe
// root-squaring lifts to Z4 and R, basic irreducibility / primitivity tests,
// and CRT orthogonal idempotents.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ru4/gf2.hpp"
#include "ru4/poly.hpp"
#include "ru4/ring.hpp"

namespace ru4 {

// Factorizations are desk-scale: F_{2^r} tables and minimal-polynomial
// products stay small as long as r = ord_n(2) is modest.
inline constexpr int kDefaultMaxOrd = 20;

inline void require_odd(int n) {
  if (n < 1 || n % 2 == 0) throw std::domain_error("length must be odd");
}

// Multiplicative order of 2 mod n.
inline int ord2_mod(int n) {
  require_odd(n);
  if (n == 1) return 1;
  int r = 1;
  long long t = 2 % n;
  while (t != 1) {
    t = (t * 2) % n;
    ++r;
  }
  return r;
}

struct CyclotomicCoset {
  int leader = 0;
  std::vector<int> members;  // orbit of leader under doubling mod n, sorted
};

inline std::vector<CyclotomicCoset> cyclotomic_cosets(int n) {
  require_odd(n);
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<CyclotomicCoset> out;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    CyclotomicCoset cs;
    cs.leader = s;
    int x = s;
    do {
      seen[static_cast<size_t>(x)] = true;
      cs.members.push_back(x);
      x = (2 * x) % n;
    } while (x != s);
    std::sort(cs.members.begin(), cs.members.end());
    out.push_back(std::move(cs));
  }
  return out;
}

template <class T>
struct Factorization {
  int n = 1;
  std::vector<Poly<T>> factors;          // monic, ordered by coset leader
  std::vector<CyclotomicCoset> cosets;   // factors[i] <-> cosets[i]
};

// Irreducible factors of x^n - 1 over F2: one per cyclotomic coset, the
// factor for coset C being the minimal polynomial of beta^leader where beta
// is a primitive n-th root of unity in F_{2^r}, r = ord_n(2).
inline Factorization<F2> factor_xn1_f2(int n, int max_ord = kDefaultMaxOrd) {
  require_odd(n);
  int r = ord2_mod(n);
  if (r > max_ord)
    throw std::domain_error("ord_n(2) = " + std::to_string(r) +
                            " exceeds the configured bound " + std::to_string(max_ord));
  Factorization<F2> out;
  out.n = n;
  out.cosets = cyclotomic_cosets(n);
  gf2::Field field(r);
  gf2::Mask beta = field.element_of_order(static_cast<uint64_t>(n));
  for (const auto& cs : out.cosets) {
    // product of (y - beta^j) over the coset, coefficients in F_{2^r}
    std::vector<gf2::Mask> poly{1};
    for (int j : cs.members) {
      gf2::Mask root = field.pow(beta, static_cast<uint64_t>(j));
      std::vector<gf2::Mask> next(poly.size() + 1, 0);
      for (size_t d = 0; d < poly.size(); ++d) {
        next[d + 1] ^= poly[d];
        next[d] ^= field.mul(poly[d], root);  // -root = root over F2
      }
      poly = std::move(next);
    }
    std::vector<F2> coeffs;
    coeffs.reserve(poly.size());
    for (gf2::Mask c : poly) {
      if (c > 1) throw std::logic_error("minimal polynomial has a coefficient outside F2");
      coeffs.push_back(F2{static_cast<int>(c)});
    }
    out.factors.push_back(PolyF2{std::move(coeffs)});
  }
  PolyF2 prod = PolyF2::one();
  for (const auto& f : out.factors) prod = prod * f;
  if (!(prod == PolyF2::xn_minus_1(n)))
    throw std::logic_error("F2 factor product does not recombine to x^n-1");
  return out;
}

// Graeffe root squaring: split g = e + o into even/odd-exponent parts; the
// Z4 lift ghat satisfies ghat(x^2) = +-(e^2 - o^2), the sign fixed by
// monicity.  This is the Hensel lift for divisors of x^n - 1.
inline PolyZ4 graeffe_lift(const PolyF2& g) {
  if (g.is_zero() || !g.is_monic()) throw std::domain_error("graeffe_lift: input must be monic");
  PolyZ4 gz = lift_to_z4(g);
  PolyZ4 even, odd;
  even.c.assign(gz.c.size(), Z4::zero());
  odd.c.assign(gz.c.size(), Z4::zero());
  for (int i = 0; i <= gz.degree(); ++i)
    (i % 2 == 0 ? even : odd).c[static_cast<size_t>(i)] = gz.at(i);
  even.normalize();
  odd.normalize();
  PolyZ4 diff = even * even - odd * odd;
  std::vector<Z4> half(static_cast<size_t>(g.degree()) + 1, Z4::zero());
  for (int i = 0; i <= diff.degree(); ++i) {
    if (diff.at(i).is_zero()) continue;
    if (i % 2 != 0) throw std::logic_error("graeffe_lift: odd-degree term survived squaring");
    half[static_cast<size_t>(i / 2)] = diff.at(i);
  }
  PolyZ4 ghat{std::move(half)};
  if (!ghat.is_monic()) ghat = -ghat;
  if (!ghat.is_monic() || !(poly_mod_maximal(ghat) == g))
    throw std::logic_error("graeffe_lift: lift does not reduce to its source");
  return ghat;
}

// The unique monic basic irreducible lift of an irreducible g | x^n - 1;
// n is recovered as the order of the roots of g.  The lift to R is the Z4
// lift reinterpreted, Z4 being a subring of R.
inline PolyZ4 hensel_lift_z4(const PolyF2& g) {
  if (g.degree() < 1 || !g.is_monic())
    throw std::domain_error("hensel_lift: need a monic polynomial of positive degree");
  if (g.at(0).is_zero()) throw std::domain_error("hensel_lift: x divides the input");
  gf2::Mask m = 0;
  for (int i = 0; i <= g.degree(); ++i)
    if (g.at(i).v) m |= gf2::Mask{1} << i;
  if (!gf2::is_irreducible(m)) throw std::domain_error("hensel_lift: input is not irreducible");
  uint64_t n = gf2::order_of_x(m);  // g | x^n - 1 with n the root order
  PolyZ4 lift = graeffe_lift(g);
  auto [q, rem] = PolyZ4::xn_minus_1(static_cast<int>(n)).divmod_monic(lift);
  (void)q;
  if (!rem.is_zero()) throw std::logic_error("hensel_lift: lift does not divide x^n-1");
  return lift;
}

inline PolyR hensel_lift_r(const PolyF2& g) { return lift_to_r(hensel_lift_z4(g)); }

inline Factorization<Z4> factor_xn1_z4(int n, int max_ord = kDefaultMaxOrd) {
  Factorization<F2> base = factor_xn1_f2(n, max_ord);
  Factorization<Z4> out;
  out.n = n;
  out.cosets = base.cosets;
  for (const auto& f : base.factors) out.factors.push_back(graeffe_lift(f));
  PolyZ4 prod = PolyZ4::one();
  for (const auto& f : out.factors) prod = prod * f;
  if (!(prod == PolyZ4::xn_minus_1(n)))
    throw std::logic_error("Z4 factor product does not recombine to x^n-1");
  return out;
}

inline Factorization<RingElement> factor_xn1_r(int n, int max_ord = kDefaultMaxOrd) {
  Factorization<Z4> base = factor_xn1_z4(n, max_ord);
  Factorization<RingElement> out;
  out.n = n;
  out.cosets = base.cosets;
  for (const auto& f : base.factors) out.factors.push_back(lift_to_r(f));
  return out;
}

// --- basic irreducibility / primitivity -------------------------------------

namespace detail {
template <class T>
gf2::Mask f2_image_mask(const Poly<T>& f) {
  PolyF2 fbar = poly_mod_maximal(f);
  if (fbar.degree() > 62) throw std::domain_error("degree too large for the F2 engine");
  gf2::Mask m = 0;
  for (int i = 0; i <= fbar.degree(); ++i)
    if (fbar.at(i).v) m |= gf2::Mask{1} << i;
  return m;
}
}  // namespace detail

template <class T>
bool is_basic_irreducible(const Poly<T>& f) {
  return gf2::is_irreducible(detail::f2_image_mask(f));
}

template <class T>
bool is_basic_primitive(const Poly<T>& f) {
  return gf2::is_primitive(detail::f2_image_mask(f));
}

// --- CRT idempotents ---------------------------------------------------------

template <class T>
struct CrtIdempotentSet {
  int n = 1;
  std::vector<CyclicPoly<T>> idempotents;  // e_i = 1 mod f_i, 0 mod f_j
};

// e_i = lambda * hhat_i with hhat_i = (x^n-1)/f_i, lambda from the Bezout
// identity A f_i + B hhat_i = 1.
template <class T>
CrtIdempotentSet<T> crt_idempotents(const Factorization<T>& fac) {
  CrtIdempotentSet<T> out;
  out.n = fac.n;
  Poly<T> xn1 = Poly<T>::xn_minus_1(fac.n);
  for (const auto& f : fac.factors) {
    auto [hhat, rem] = xn1.divmod_monic(f);
    if (!rem.is_zero()) throw std::logic_error("crt_idempotents: factor does not divide x^n-1");
    auto bez = bezout_lift(f, hhat);
    if (!bez) throw std::logic_error("crt_idempotents: factors are not pairwise coprime");
    CyclicPoly<T> e(fac.n, bez->second * hhat);
    out.idempotents.push_back(std::move(e));
  }
  // CRT orthogonality laws, checked on construction
  CyclicPoly<T> sum(fac.n);
  for (size_t i = 0; i < out.idempotents.size(); ++i) {
    const auto& ei = out.idempotents[i];
    if (!(ei * ei == ei)) throw std::logic_error("crt_idempotents: e_i^2 != e_i");
    for (size_t j = i + 1; j < out.idempotents.size(); ++j)
      if (!(ei * out.idempotents[j]).is_zero())
        throw std::logic_error("crt_idempotents: e_i e_j != 0");
    sum = sum + ei;
  }
  if (!(sum == CyclicPoly<T>::one(fac.n))) throw std::logic_error("crt_idempotents: sum != 1");
  return out;
}

}  // namespace ru4
