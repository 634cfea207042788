#pragma once

// The Galois extension GR(R,r) = R[x]/<f> for a basic primitive modulus f:
// exact arithmetic, Teichmuller coordinates a0 + 2a1 + u a2 + 2u a3,
// units and inverses, the Frobenius automorphism, n-th roots of unity and
// minimal polynomials over R.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ru4/factor.hpp"
#include "ru4/poly.hpp"
#include "ru4/ring.hpp"

namespace ru4 {

// Coordinate vector in the basis 1, xi, ..., xi^{r-1}; always fully reduced.
struct GrElem {
  std::vector<RingElement> c;

  bool is_zero() const {
    for (auto x : c)
      if (!x.is_zero()) return false;
    return true;
  }
  friend bool operator==(const GrElem& x, const GrElem& y) { return x.c == y.c; }
};

// Teichmuller coordinates as indices into T: -1 encodes the zero element,
// k >= 0 encodes xi^k.
struct TeichCoords {
  int a0 = -1, a1 = -1, a2 = -1, a3 = -1;
  friend bool operator==(const TeichCoords&, const TeichCoords&) = default;
};

class GaloisRing {
 public:
  // Default modulus: the Hensel lift of the smallest primitive F2 polynomial
  // of degree r.
  explicit GaloisRing(int r) : GaloisRing(r, lift_to_r(graeffe_lift(smallest_primitive_f2(r)))) {}

  GaloisRing(int r, const PolyR& modulus) : r_(r), modulus_(modulus) {
    if (r < 1 || r > kMaxDegree) throw std::domain_error("GaloisRing: degree out of range");
    if (modulus_.degree() != r || !modulus_.is_monic())
      throw std::domain_error("GaloisRing: modulus must be monic of the stated degree");
    group_order_ = (uint64_t{1} << r) - 1;
    build_teichmuller();
  }

  int degree() const { return r_; }
  const PolyR& modulus() const { return modulus_; }
  uint64_t group_order() const { return group_order_; }  // |T \ {0}| = 2^r - 1
  uint64_t size_log2() const { return 4ull * r_; }       // |GR(R,r)| = 16^r

  GrElem zero() const { return GrElem{std::vector<RingElement>(r_, RingElement::zero())}; }
  GrElem one() const { return from_r(RingElement::one()); }
  GrElem xi() const { return teich(1); }
  GrElem from_r(RingElement v) const {
    GrElem e = zero();
    e.c[0] = v;
    return e;
  }
  // xi^k for k taken mod 2^r - 1
  GrElem teich(uint64_t k) const { return teich_[static_cast<size_t>(k % group_order_)]; }

  GrElem add(const GrElem& x, const GrElem& y) const {
    GrElem z = zero();
    for (int i = 0; i < r_; ++i) z.c[i] = x.c[i] + y.c[i];
    return z;
  }
  GrElem sub(const GrElem& x, const GrElem& y) const {
    GrElem z = zero();
    for (int i = 0; i < r_; ++i) z.c[i] = x.c[i] - y.c[i];
    return z;
  }
  GrElem neg(const GrElem& x) const {
    GrElem z = zero();
    for (int i = 0; i < r_; ++i) z.c[i] = -x.c[i];
    return z;
  }
  GrElem scale(RingElement s, const GrElem& x) const {
    GrElem z = zero();
    for (int i = 0; i < r_; ++i) z.c[i] = s * x.c[i];
    return z;
  }

  GrElem mul(const GrElem& x, const GrElem& y) const {
    std::vector<RingElement> prod(static_cast<size_t>(2 * r_ - 1), RingElement::zero());
    for (int i = 0; i < r_; ++i) {
      if (x.c[i].is_zero()) continue;
      for (int j = 0; j < r_; ++j) prod[i + j] = prod[i + j] + x.c[i] * y.c[j];
    }
    reduce(prod);
    prod.resize(static_cast<size_t>(r_));
    return GrElem{std::move(prod)};
  }

  GrElem pow(GrElem base, uint64_t e) const {
    GrElem acc = one();
    while (e) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }

  // Horner evaluation of a scalar-coefficient polynomial.
  GrElem eval(const PolyR& f, const GrElem& at) const {
    GrElem acc = zero();
    for (int d = f.degree(); d >= 0; --d) acc = add(mul(acc, at), from_r(f.at(d)));
    return acc;
  }

  // Residue-field image as a bitmask (bit i = a-part of coordinate i mod 2).
  uint32_t residue_mask(const GrElem& x) const {
    uint32_t m = 0;
    for (int i = 0; i < r_; ++i)
      if (x.c[i].f2_bit()) m |= uint32_t{1} << i;
    return m;
  }

  bool is_unit(const GrElem& x) const { return residue_mask(x) != 0; }

  // Unique decomposition x = a0 + 2a1 + u a2 + 2u a3 with all four in T.
  // The A / B coordinate parts are handled through the mod-u quotient, so a
  // modulus with u-components is supported as well.
  TeichCoords teichmuller_decompose(const GrElem& x) const {
    GrElem a = zero(), b = zero();
    for (int i = 0; i < r_; ++i) {
      a.c[i] = RingElement{x.c[i].a, Z4::zero()};
      b.c[i] = RingElement{x.c[i].b, Z4::zero()};
    }
    TeichCoords t;
    decompose_z4_part(a, t.a0, t.a1);
    // subtract the u-part that a0 + 2a1 already carries
    GrElem carry = zero();
    if (t.a0 >= 0) carry = teich_[t.a0];
    if (t.a1 >= 0) carry = add(carry, scale(RingElement{2, 0}, teich_[t.a1]));
    for (int i = 0; i < r_; ++i) b.c[i] = b.c[i] - RingElement{carry.c[i].b, Z4::zero()};
    decompose_z4_part(b, t.a2, t.a3);
    return t;
  }

  GrElem recompose(const TeichCoords& t) const {
    GrElem x = zero();
    if (t.a0 >= 0) x = add(x, teich_[t.a0]);
    if (t.a1 >= 0) x = add(x, scale(RingElement{2, 0}, teich_[t.a1]));
    if (t.a2 >= 0) x = add(x, scale(RingElement{0, 1}, teich_[t.a2]));
    if (t.a3 >= 0) x = add(x, scale(RingElement{0, 2}, teich_[t.a3]));
    return x;
  }

  // sigma(x) = a0^2 + 2a1^2 + u a2^2 + 2u a3^2; squaring T is index doubling.
  GrElem frobenius(const GrElem& x) const {
    TeichCoords t = teichmuller_decompose(x);
    auto sq = [&](int k) { return k < 0 ? -1 : static_cast<int>((2 * static_cast<uint64_t>(k)) % group_order_); };
    return recompose(TeichCoords{sq(t.a0), sq(t.a1), sq(t.a2), sq(t.a3)});
  }

  // x^4 = a0^4 lands in T for every x, which turns inversion into three
  // multiplications and a table lookup.
  GrElem inverse(const GrElem& x) const {
    if (!is_unit(x))
      throw std::domain_error("GR element is not a unit (zero residue image)");
    GrElem x2 = mul(x, x);
    GrElem x3 = mul(x2, x);
    GrElem x4 = mul(x2, x2);
    int k = teich_index_.at(residue_mask(x4));
    if (k < 0 || !(teich_[k] == x4)) throw std::logic_error("inverse: x^4 is not in T");
    uint64_t j = (group_order_ - (static_cast<uint64_t>(k) % group_order_)) % group_order_;
    GrElem inv = mul(x3, teich(j));
    if (!(mul(inv, x) == one())) throw std::logic_error("inverse: verification failed");
    return inv;
  }

  // The n distinct powers of xi^{(2^r-1)/n}; requires n | 2^r - 1.
  std::vector<GrElem> nth_roots(int n) const {
    if (n < 1 || group_order_ % static_cast<uint64_t>(n) != 0)
      throw std::domain_error("nth_roots: n does not divide 2^r-1");
    uint64_t step = group_order_ / static_cast<uint64_t>(n);
    std::vector<GrElem> roots;
    roots.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) roots.push_back(teich(step * static_cast<uint64_t>(k)));
    return roots;
  }

  // M_i(x) = prod over the 2-cyclotomic coset of i mod n of (x - beta^j),
  // beta = xi^{(2^r-1)/n}.  Every coefficient must land in R.
  PolyR minimal_polynomial(int i, int n) const {
    if (n < 1 || group_order_ % static_cast<uint64_t>(n) != 0)
      throw std::domain_error("minimal_polynomial: n does not divide 2^r-1");
    uint64_t step = group_order_ / static_cast<uint64_t>(n);
    int s = ((i % n) + n) % n;
    std::vector<int> coset{s};
    for (int x = (2 * s) % n; x != s; x = (2 * x) % n) coset.push_back(x);
    std::vector<GrElem> poly{one()};
    for (int j : coset) {
      GrElem root = teich(step * static_cast<uint64_t>(j));
      std::vector<GrElem> next(poly.size() + 1, zero());
      for (size_t d = 0; d < poly.size(); ++d) {
        next[d + 1] = add(next[d + 1], poly[d]);
        next[d] = sub(next[d], mul(poly[d], root));
      }
      poly = std::move(next);
    }
    std::vector<RingElement> coeffs;
    coeffs.reserve(poly.size());
    for (const auto& ce : poly) {
      for (int k = 1; k < r_; ++k)
        if (!ce.c[k].is_zero())
          throw std::logic_error("minimal_polynomial: coefficient lies outside R");
      coeffs.push_back(ce.c[0]);
    }
    return PolyR{std::move(coeffs)};
  }

  // Coordinates printed in the paper's style, e.g. "3xi^3+xi^2+2xi".
  std::string to_string(const GrElem& x) const {
    std::string out;
    for (int d = r_ - 1; d >= 0; --d) {
      RingElement v = x.c[d];
      if (v.is_zero()) continue;
      std::string cs = ru4::to_string(v);
      std::string term;
      if (d == 0) {
        term = cs;
      } else {
        std::string base = d == 1 ? "xi" : "xi^" + std::to_string(d);
        bool mixed = !v.a.is_zero() && !v.b.is_zero();
        if (cs == "1")
          term = base;
        else if (mixed)
          term = "(" + cs + ")" + base;
        else
          term = cs + base;
      }
      if (!out.empty()) out += "+";
      out += term;
    }
    return out.empty() ? "0" : out;
  }

  static constexpr int kMaxDegree = 20;  // keeps the T tables desk-scale

 private:
  static PolyF2 smallest_primitive_f2(int r) {
    gf2::Mask m = gf2::find_primitive(r);
    std::vector<F2> c;
    for (int i = 0; i <= gf2::deg(m); ++i) c.push_back(F2{static_cast<int>((m >> i) & 1)});
    return PolyF2{std::move(c)};
  }

  void reduce(std::vector<RingElement>& prod) const {
    for (int d = static_cast<int>(prod.size()) - 1; d >= r_; --d) {
      RingElement c = prod[static_cast<size_t>(d)];
      if (c.is_zero()) continue;
      for (int k = 0; k <= r_; ++k)
        prod[static_cast<size_t>(d - r_ + k)] =
            prod[static_cast<size_t>(d - r_ + k)] - c * modulus_.at(k);
    }
  }

  void build_teichmuller() {
    // walk xi^0, xi^1, ...; a basic primitive modulus gives order 2^r - 1
    teich_.clear();
    teich_.reserve(static_cast<size_t>(group_order_));
    GrElem x = zero();
    if (r_ == 1) {
      x.c[0] = -modulus_.at(0);  // xi = class of x = the root of a linear modulus
    } else {
      x.c[1] = RingElement::one();
    }
    GrElem cur = one();
    for (uint64_t k = 0; k < group_order_; ++k) {
      if (k > 0 && cur == one())
        throw std::domain_error("GaloisRing: modulus is not basic primitive (xi order " +
                                std::to_string(k) + " < 2^r-1)");
      teich_.push_back(cur);
      cur = mul(cur, x);
    }
    if (!(cur == one()))
      throw std::domain_error("GaloisRing: modulus is not basic primitive (xi^(2^r-1) != 1)");
    teich_index_.assign(size_t{1} << r_, -1);
    for (size_t k = 0; k < teich_.size(); ++k) {
      uint32_t m = residue_mask(teich_[k]);
      if (m == 0 || teich_index_[m] != -1)
        throw std::domain_error("GaloisRing: Teichmuller set does not cover the residue field");
      teich_index_[m] = static_cast<int>(k);
    }
  }

  // 2-adic split of an element with pure Z4 coordinates: v = t0 + 2*t1.
  void decompose_z4_part(const GrElem& v, int& t0, int& t1) const {
    uint32_t m = residue_mask(v);
    t0 = m == 0 ? -1 : teich_index_[m];
    GrElem rest = v;
    if (t0 >= 0) {
      const GrElem& w = teich_[t0];
      for (int i = 0; i < r_; ++i) rest.c[i] = RingElement{rest.c[i].a - w.c[i].a, Z4::zero()};
    }
    uint32_t h = 0;  // (rest / 2) mod 2, via the bijection 2GR(4,r) <-> F_{2^r}
    for (int i = 0; i < r_; ++i) {
      uint8_t av = rest.c[i].a.v;
      if (av & 1) throw std::logic_error("teichmuller_decompose: residual is not even");
      if (av & 2) h |= uint32_t{1} << i;
    }
    t1 = h == 0 ? -1 : teich_index_[h];
  }

  int r_;
  PolyR modulus_;
  uint64_t group_order_;
  std::vector<GrElem> teich_;        // xi^0 .. xi^{2^r-2}
  std::vector<int> teich_index_;     // residue mask -> T index
};

}  // namespace ru4
