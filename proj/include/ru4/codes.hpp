#pragma once

// Cyclic codes of odd length n over R, i.e. ideals of R[x]/<x^n-1>.
//
// Everything is driven by the CRT picture: x^n - 1 splits into pairwise
// coprime basic irreducible factors f_1..f_m, each local ring R[x]/<f_i> is
// a Galois extension of R with the same seven ideals as R, and a cyclic code
// is exactly a choice of one local ideal per factor.  The canonical
// two-generator form <g + up, ua> with a | g is derived from that local
// vector.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "ru4/factor.hpp"
#include "ru4/galois.hpp"
#include "ru4/poly.hpp"
#include "ru4/ring.hpp"

namespace ru4 {

using Codeword = std::vector<RingElement>;  // n coordinates

inline int hamming_weight(const Codeword& w) {
  int s = 0;
  for (auto x : w)
    if (!x.is_zero()) ++s;
  return s;
}

inline int lee_weight(const Codeword& w) {
  int s = 0;
  for (auto x : w) s += lee_weight(x);
  return s;
}

// Gray image of a word: the b-vector followed by the (a+b)-vector.
inline std::vector<Z4> gray_image(const Codeword& w) {
  std::vector<Z4> img(2 * w.size());
  for (size_t i = 0; i < w.size(); ++i) {
    GrayPair g = gray_symbol(w[i]);
    img[i] = g.first;
    img[i + w.size()] = g.second;
  }
  return img;
}

inline int lee_weight_z4(const std::vector<Z4>& v) {
  int s = 0;
  for (auto x : v) s += lee_weight(x);
  return s;
}

// Words pack into 4 bits per coordinate; n <= 31 fits in an unsigned 128.
using PackedWord = unsigned __int128;

inline PackedWord pack_word(const Codeword& w) {
  PackedWord k = 0;
  for (size_t i = 0; i < w.size(); ++i) k |= PackedWord(w[i].pack()) << (4 * i);
  return k;
}

struct PackedWordHash {
  size_t operator()(PackedWord k) const {
    uint64_t lo = static_cast<uint64_t>(k), hi = static_cast<uint64_t>(k >> 64);
    uint64_t h = lo * 0x9E3779B97F4A7C15ull ^ (hi + 0x9E3779B97F4A7C15ull + (lo << 6));
    return static_cast<size_t>(h ^ (h >> 31));
  }
};

using WordSet = std::unordered_set<PackedWord, PackedWordHash>;

// Coordinatewise mod-4 arithmetic on packed words: the a-lanes live in bits
// [1:0] of each nibble and the b-lanes in bits [3:2]; lane sums fit in three
// bits, so masking restores mod 4.
namespace detail {
inline constexpr PackedWord kALanes = []() {
  PackedWord m = 0;
  for (int i = 0; i < 32; ++i) m |= PackedWord{0x3} << (4 * i);
  return m;
}();
inline constexpr PackedWord kBLanes = kALanes << 2;
}  // namespace detail

inline PackedWord packed_add(PackedWord x, PackedWord y) {
  using detail::kALanes;
  using detail::kBLanes;
  return (((x & kALanes) + (y & kALanes)) & kALanes) |
         (((x & kBLanes) + (y & kBLanes)) & kBLanes);
}

inline PackedWord packed_double(PackedWord x) { return packed_add(x, x); }
inline PackedWord packed_times_u(PackedWord x) { return (x & detail::kALanes) << 2; }

// ---------------------------------------------------------------------------
// Shared per-length context: factorizations and CRT idempotents.

struct CodeContext {
  int n = 1;
  Factorization<F2> f2;
  Factorization<Z4> z4;
  Factorization<RingElement> r;
  CrtIdempotentSet<RingElement> idem_r;
  CrtIdempotentSet<Z4> idem_z4;
  std::vector<int> reciprocal;  // coset negation pairing between factors

  int factor_count() const { return static_cast<int>(r.factors.size()); }
  int factor_degree(int i) const { return r.factors[static_cast<size_t>(i)].degree(); }

  static std::shared_ptr<const CodeContext> make(int n, int max_ord = kDefaultMaxOrd) {
    auto ctx = std::make_shared<CodeContext>();
    ctx->n = n;
    ctx->f2 = factor_xn1_f2(n, max_ord);
    ctx->z4 = factor_xn1_z4(n, max_ord);
    ctx->r = factor_xn1_r(n, max_ord);
    ctx->idem_r = crt_idempotents(ctx->r);
    ctx->idem_z4 = crt_idempotents(ctx->z4);
    ctx->reciprocal.assign(ctx->r.factors.size(), -1);
    for (size_t i = 0; i < ctx->r.cosets.size(); ++i) {
      std::vector<int> neg;
      for (int mbr : ctx->r.cosets[i].members) neg.push_back((n - mbr) % n);
      std::sort(neg.begin(), neg.end());
      for (size_t j = 0; j < ctx->r.cosets.size(); ++j)
        if (ctx->r.cosets[j].members == neg) ctx->reciprocal[i] = static_cast<int>(j);
      if (ctx->reciprocal[i] < 0) throw std::logic_error("coset negation is not a coset");
    }
    return ctx;
  }
};

// ---------------------------------------------------------------------------
// Local classification.  For a residue v = A + uB mod f_i (A, B over Z4) the
// Teichmuller coordinates reduce to parity tests:
//   A odd -> unit; A even nonzero -> a1 != 0; B odd -> a2 != 0.

inline IdealKind classify_local(const PolyR& value) {
  PolyZ4 a_part, b_part;
  a_part.c.reserve(value.c.size());
  b_part.c.reserve(value.c.size());
  for (auto x : value.c) {
    a_part.c.push_back(x.a);
    b_part.c.push_back(x.b);
  }
  a_part.normalize();
  b_part.normalize();
  bool a_odd = is_regular(a_part), a_nonzero = !a_part.is_zero();
  bool b_odd = is_regular(b_part), b_nonzero = !b_part.is_zero();
  if (a_odd) return IdealKind::Unit;
  if (a_nonzero) return b_odd ? IdealKind::TwoPlusU : IdealKind::Two;
  if (b_odd) return IdealKind::U;
  if (b_nonzero) return IdealKind::TwoU;
  return IdealKind::Zero;
}

inline std::vector<IdealKind> locals_from_generators(const CodeContext& ctx,
                                                     const std::vector<CyclicPolyR>& gens) {
  std::vector<IdealKind> locals(ctx.r.factors.size(), IdealKind::Zero);
  for (size_t i = 0; i < ctx.r.factors.size(); ++i)
    for (const auto& gen : gens) {
      PolyR rem = gen.to_poly().divmod_monic(ctx.r.factors[i]).second;
      locals[i] = ideal_join(locals[i], classify_local(rem));
    }
  return locals;
}

// Sizes of the seven local ideals of GR(R,d), as log2.
inline int local_size_log2(IdealKind k, int d) {
  switch (k) {
    case IdealKind::Zero: return 0;
    case IdealKind::TwoU: return d;
    case IdealKind::U:
    case IdealKind::Two:
    case IdealKind::TwoPlusU: return 2 * d;
    case IdealKind::Maximal: return 3 * d;
    case IdealKind::Unit: return 4 * d;
  }
  return 0;
}

// Annihilator within the local ring, used by duality.
inline IdealKind local_annihilator(IdealKind k) {
  switch (k) {
    case IdealKind::Zero: return IdealKind::Unit;
    case IdealKind::TwoU: return IdealKind::Maximal;
    case IdealKind::U: return IdealKind::U;
    case IdealKind::Two: return IdealKind::Two;
    case IdealKind::TwoPlusU: return IdealKind::TwoPlusU;
    case IdealKind::Maximal: return IdealKind::TwoU;
    case IdealKind::Unit: return IdealKind::Zero;
  }
  return IdealKind::Zero;
}

// ---------------------------------------------------------------------------
// Z4 cyclic codes (Res, Tor and the components of the decomposition).
// Locally an ideal of GR(4,d) is 0, <2> or <1>.

enum class Z4Local : uint8_t { Zero, Two, One };

struct Z4CyclicCode {
  std::shared_ptr<const CodeContext> ctx;
  std::vector<Z4Local> locals;

  int n() const { return ctx->n; }

  // monic divisor pair: C = <F1 + 2 F0>, F0 | F1 | x^n - 1
  PolyZ4 divisor_f1() const {
    PolyZ4 p = PolyZ4::one();
    for (size_t i = 0; i < locals.size(); ++i)
      if (locals[i] != Z4Local::One) p = p * ctx->z4.factors[i];
    return p;
  }
  PolyZ4 divisor_f0() const {
    PolyZ4 p = PolyZ4::one();
    for (size_t i = 0; i < locals.size(); ++i)
      if (locals[i] == Z4Local::Zero) p = p * ctx->z4.factors[i];
    return p;
  }

  // Canonical single generator (the ring is a PIR for odd n).
  PolyZ4 generator() const {
    PolyZ4 f1 = divisor_f1(), f0 = divisor_f0();
    if (f1 == f0) return f1.degree() == ctx->n ? PolyZ4::zero() : f1;
    if (f1.degree() == ctx->n) return f0.scaled(Z4{2});
    return f1 + f0.scaled(Z4{2});
  }

  bool is_free() const {
    for (auto l : locals)
      if (l == Z4Local::Two) return false;
    return true;
  }
  bool is_zero() const {
    for (auto l : locals)
      if (l != Z4Local::Zero) return false;
    return true;
  }
  int size_log2() const {
    int s = 0;
    for (size_t i = 0; i < locals.size(); ++i) {
      int d = ctx->factor_degree(static_cast<int>(i));
      s += locals[i] == Z4Local::One ? 2 * d : (locals[i] == Z4Local::Two ? d : 0);
    }
    return s;
  }
  int free_rank() const {  // meaningful when is_free()
    int s = 0;
    for (size_t i = 0; i < locals.size(); ++i)
      if (locals[i] == Z4Local::One) s += ctx->factor_degree(static_cast<int>(i));
    return s;
  }

  Z4CyclicCode dual() const {
    std::vector<Z4Local> dl(locals.size(), Z4Local::Zero);
    for (size_t i = 0; i < locals.size(); ++i) {
      Z4Local ann = locals[i] == Z4Local::Zero
                        ? Z4Local::One
                        : (locals[i] == Z4Local::One ? Z4Local::Zero : Z4Local::Two);
      dl[static_cast<size_t>(ctx->reciprocal[i])] = ann;
    }
    return Z4CyclicCode{ctx, std::move(dl)};
  }

  friend bool operator==(const Z4CyclicCode& a, const Z4CyclicCode& b) {
    return a.ctx->n == b.ctx->n && a.locals == b.locals;
  }
};

inline Z4Local classify_local_z4(const PolyZ4& value) {
  if (is_regular(value)) return Z4Local::One;
  return value.is_zero() ? Z4Local::Zero : Z4Local::Two;
}

inline Z4Local z4_join(Z4Local a, Z4Local b) {
  if (a == Z4Local::One || b == Z4Local::One) return Z4Local::One;
  if (a == Z4Local::Two || b == Z4Local::Two) return Z4Local::Two;
  return Z4Local::Zero;
}

inline Z4CyclicCode z4_code_from_generators(std::shared_ptr<const CodeContext> ctx,
                                            const std::vector<CyclicPolyZ4>& gens) {
  std::vector<Z4Local> locals(ctx->z4.factors.size(), Z4Local::Zero);
  for (size_t i = 0; i < ctx->z4.factors.size(); ++i)
    for (const auto& gen : gens) {
      PolyZ4 rem = gen.to_poly().divmod_monic(ctx->z4.factors[i]).second;
      locals[i] = z4_join(locals[i], classify_local_z4(rem));
    }
  return Z4CyclicCode{std::move(ctx), std::move(locals)};
}

// ---------------------------------------------------------------------------
// The code itself.

struct CyclicCode {
  std::shared_ptr<const CodeContext> ctx;
  std::vector<IdealKind> locals;
  // canonical triple over Z4: C = <g + up, ua>, a | g, p reduced mod Tor
  PolyZ4 g, p, a;

  int n() const { return ctx->n; }

  CyclicPolyR first_generator() const {
    CyclicPolyR gp(ctx->n, lift_to_r(g));
    return gp + cyclic_times_u(CyclicPolyR(ctx->n, lift_to_r(p)));
  }
  CyclicPolyR second_generator() const {
    return cyclic_times_u(CyclicPolyR(ctx->n, lift_to_r(a)));
  }

  int size_log2() const {
    int s = 0;
    for (size_t i = 0; i < locals.size(); ++i)
      s += local_size_log2(locals[i], ctx->factor_degree(static_cast<int>(i)));
    return s;
  }
  bool is_zero() const { return size_log2() == 0; }

  // R-free <=> every local ideal is 0 or the whole local ring; equivalently
  // the code is principal with a monic divisor generator.
  bool is_free() const {
    for (auto l : locals)
      if (l != IdealKind::Zero && l != IdealKind::Unit) return false;
    return true;
  }
  int free_rank() const {
    int s = 0;
    for (size_t i = 0; i < locals.size(); ++i)
      if (locals[i] == IdealKind::Unit) s += ctx->factor_degree(static_cast<int>(i));
    return s;
  }
  // The monic divisor of x^n-1 generating a free code.
  PolyR free_generator() const {
    if (!is_free()) throw std::domain_error("code is not R-free");
    PolyR gp = PolyR::one();
    for (size_t i = 0; i < locals.size(); ++i)
      if (locals[i] == IdealKind::Zero) gp = gp * ctx->r.factors[i];
    return gp;
  }
  std::vector<CyclicPolyR> free_basis() const {
    PolyR gp = free_generator();
    std::vector<CyclicPolyR> basis;
    CyclicPolyR base(ctx->n, gp);
    for (int j = 0; j < ctx->n - gp.degree(); ++j) basis.push_back(base.shifted(j));
    return basis;
  }

  Z4CyclicCode res_code() const {
    std::vector<Z4Local> rl(locals.size());
    for (size_t i = 0; i < locals.size(); ++i) {
      switch (locals[i]) {
        case IdealKind::Zero:
        case IdealKind::TwoU:
        case IdealKind::U: rl[i] = Z4Local::Zero; break;
        case IdealKind::Two:
        case IdealKind::TwoPlusU:
        case IdealKind::Maximal: rl[i] = Z4Local::Two; break;
        case IdealKind::Unit: rl[i] = Z4Local::One; break;
      }
    }
    return Z4CyclicCode{ctx, std::move(rl)};
  }
  Z4CyclicCode tor_code() const {
    std::vector<Z4Local> tl(locals.size());
    for (size_t i = 0; i < locals.size(); ++i) {
      switch (locals[i]) {
        case IdealKind::Zero: tl[i] = Z4Local::Zero; break;
        case IdealKind::TwoU:
        case IdealKind::Two:
        case IdealKind::TwoPlusU: tl[i] = Z4Local::Two; break;
        case IdealKind::U:
        case IdealKind::Maximal:
        case IdealKind::Unit: tl[i] = Z4Local::One; break;
      }
    }
    return Z4CyclicCode{ctx, std::move(tl)};
  }

  // C = Res + u Tor as sets iff no local is <2+u>.
  bool splits() const {
    for (auto l : locals)
      if (l == IdealKind::TwoPlusU) return false;
    return true;
  }

  CyclicCode dual() const {
    std::vector<IdealKind> dl(locals.size(), IdealKind::Zero);
    for (size_t i = 0; i < locals.size(); ++i)
      dl[static_cast<size_t>(ctx->reciprocal[i])] = local_annihilator(locals[i]);
    return from_locals(ctx, std::move(dl));
  }

  friend bool operator==(const CyclicCode& x, const CyclicCode& y) {
    return x.ctx->n == y.ctx->n && x.locals == y.locals;
  }

  static CyclicCode from_locals(std::shared_ptr<const CodeContext> c, std::vector<IdealKind> ls);
  static CyclicCode from_generators(std::shared_ptr<const CodeContext> c,
                                    const std::vector<CyclicPolyR>& gens) {
    return from_locals(c, locals_from_generators(*c, gens));
  }
};

// ---------------------------------------------------------------------------
// Canonical triple construction.

namespace detail {

// Divisibility a | f in Z4[x] covering the non-regular generators the
// canonicalization produces (a = 2*F0 with F0 monic).
inline bool z4_divides(const PolyZ4& a, const PolyZ4& f) {
  if (a.is_zero()) return f.is_zero();
  if (f.is_zero()) return true;
  if (is_regular(a)) return poly_divmod(f, a).second.is_zero();
  // a = 2*h: 2h | f  <=>  f = 2*y with hbar | ybar over F2
  PolyZ4 h;
  for (auto c : a.c) {
    if (c.is_unit()) return false;
    h.c.push_back(Z4{c.v >> 1});
  }
  h.normalize();
  for (auto c : f.c)
    if (c.is_unit()) return false;
  PolyF2 ybar;
  for (auto c : f.c) ybar.c.push_back(F2{c.v >> 1});
  ybar.normalize();
  if (!is_regular(h)) return false;  // nilpotent divisor handled only as 2*regular
  auto [q, r] = f2_divmod(ybar, poly_mod_maximal(h));
  (void)q;
  return r.is_zero();
}

}  // namespace detail

inline CyclicCode CyclicCode::from_locals(std::shared_ptr<const CodeContext> c,
                                          std::vector<IdealKind> ls) {
  CyclicCode code;
  code.ctx = c;
  code.locals = std::move(ls);

  const CodeContext& ctx = *c;
  Z4CyclicCode tor = code.tor_code();
  Z4CyclicCode res = code.res_code();
  code.a = tor.generator();

  PolyZ4 g_cand = res.generator();
  if (detail::z4_divides(code.a, g_cand)) {
    code.g = g_cand;
  } else {
    // fall back to an exactly divisible product a * w, with the cofactor
    // locals chosen so that a * w still generates Res factor by factor
    std::vector<Z4Local> wl(code.locals.size(), Z4Local::One);
    for (size_t i = 0; i < code.locals.size(); ++i) {
      if (code.locals[i] == IdealKind::U) wl[i] = Z4Local::Zero;
      if (code.locals[i] == IdealKind::TwoU || code.locals[i] == IdealKind::Maximal)
        wl[i] = Z4Local::Two;
    }
    code.g = code.a * Z4CyclicCode{c, wl}.generator();
  }

  // p: a unit at every <2+u> local, zero elsewhere, then reduced to the
  // canonical coset representative modulo Tor.
  bool any_2pu = false;
  for (auto l : code.locals) any_2pu = any_2pu || l == IdealKind::TwoPlusU;
  if (any_2pu) {
    PolyZ4 pp = PolyZ4::one();
    for (size_t i = 0; i < code.locals.size(); ++i)
      if (code.locals[i] != IdealKind::TwoPlusU) pp = pp * ctx.z4.factors[i];
    PolyZ4 f1 = tor.divisor_f1(), f0 = tor.divisor_f0();
    if (f1.degree() < ctx.n) pp = pp.divmod_monic(f1).second;
    for (int d = pp.degree(); d >= f0.degree(); --d) {
      uint8_t v = pp.at(d).v;
      if (v >= 2) pp = pp - f0.scaled(Z4{2}).shifted_up(d - f0.degree()).scaled(Z4{v >> 1});
    }
    code.p = pp;
  } else {
    code.p = PolyZ4::zero();
  }

  // the canonical pair must regenerate the same local vector
  auto check = locals_from_generators(ctx, {code.first_generator(), code.second_generator()});
  if (check != code.locals)
    throw std::logic_error("canonical generators do not regenerate the code");
  if (!detail::z4_divides(code.a, code.g))
    throw std::logic_error("canonical triple violates a | g");
  return code;
}

// ---------------------------------------------------------------------------
// Codeword enumeration through the CRT: pick one element of the chosen local
// ideal per factor and glue with idempotents.

namespace detail {

// Enumerate the chosen ideal of R[x]/<f_i> as reduced polynomials.
inline void local_ideal_elements(const CodeContext& ctx, size_t i, IdealKind kind,
                                 std::vector<PolyR>& out) {
  int d = ctx.r.factors[i].degree();
  auto for_each_poly = [&](int bits_per_coeff, auto&& make) {
    uint64_t count = uint64_t{1} << (bits_per_coeff * d);
    for (uint64_t k = 0; k < count; ++k) make(k);
  };
  auto z4_at = [&](uint64_t k, int j) { return Z4{static_cast<int>((k >> (2 * j)) & 3)}; };
  auto f2_at = [&](uint64_t k, int j) { return Z4{static_cast<int>((k >> j) & 1)}; };
  out.clear();
  switch (kind) {
    case IdealKind::Zero:
      out.push_back(PolyR::zero());
      break;
    case IdealKind::TwoU:  // 2u * (0/1 coefficients)
      for_each_poly(1, [&](uint64_t k) {
        std::vector<RingElement> c(static_cast<size_t>(d));
        for (int j = 0; j < d; ++j) c[j] = RingElement{Z4::zero(), f2_at(k, j).v ? Z4{2} : Z4{0}};
        out.push_back(PolyR{std::move(c)});
      });
      break;
    case IdealKind::Two:  // 2*(0/1) + 2u*(0/1)
      for_each_poly(2, [&](uint64_t k) {
        std::vector<RingElement> c(static_cast<size_t>(d));
        for (int j = 0; j < d; ++j) {
          Z4 av = f2_at(k, j).v ? Z4{2} : Z4{0};
          Z4 bv = f2_at(k >> d, j).v ? Z4{2} : Z4{0};
          c[j] = RingElement{av, bv};
        }
        out.push_back(PolyR{std::move(c)});
      });
      break;
    case IdealKind::U:  // u * (Z4 coefficients)
      for_each_poly(2, [&](uint64_t k) {
        std::vector<RingElement> c(static_cast<size_t>(d));
        for (int j = 0; j < d; ++j) c[j] = RingElement{Z4::zero(), z4_at(k, j)};
        out.push_back(PolyR{std::move(c)});
      });
      break;
    case IdealKind::TwoPlusU:  // (2+u) * (Z4 coefficients)
      for_each_poly(2, [&](uint64_t k) {
        std::vector<RingElement> c(static_cast<size_t>(d));
        for (int j = 0; j < d; ++j) {
          Z4 v = z4_at(k, j);
          c[j] = RingElement{Z4{2} * v, v};
        }
        out.push_back(PolyR{std::move(c)});
      });
      break;
    case IdealKind::Maximal:  // 2*(0/1) + u*(Z4)
      for_each_poly(3, [&](uint64_t k) {
        std::vector<RingElement> c(static_cast<size_t>(d));
        for (int j = 0; j < d; ++j) {
          Z4 av = f2_at(k, j).v ? Z4{2} : Z4{0};
          c[j] = RingElement{av, z4_at(k >> d, j)};
        }
        out.push_back(PolyR{std::move(c)});
      });
      break;
    case IdealKind::Unit:  // everything
      for_each_poly(4, [&](uint64_t k) {
        std::vector<RingElement> c(static_cast<size_t>(d));
        for (int j = 0; j < d; ++j)
          c[j] = RingElement{z4_at(k, j), z4_at(k >> (2 * d), j)};
        out.push_back(PolyR{std::move(c)});
      });
      break;
  }
}

}  // namespace detail

inline uint64_t default_enum_bound_log2() { return 24; }

namespace detail {
template <class Fn>
void enum_rec(const std::vector<std::vector<Codeword>>& tables, size_t level,
              std::vector<Codeword>& stack, int n, Fn&& fn) {
  if (level == tables.size()) {
    fn(const_cast<const Codeword&>(stack[level]));
    return;
  }
  for (const auto& contrib : tables[level]) {
    for (int j = 0; j < n; ++j)
      stack[level + 1][static_cast<size_t>(j)] =
          stack[level][static_cast<size_t>(j)] + contrib[static_cast<size_t>(j)];
    enum_rec(tables, level + 1, stack, n, fn);
  }
}
}  // namespace detail

// Visit every codeword exactly once.  fn receives the coordinate vector.
template <class Fn>
void for_each_codeword(const CyclicCode& code, Fn&& fn,
                       uint64_t bound_log2 = default_enum_bound_log2()) {
  if (static_cast<uint64_t>(code.size_log2()) > bound_log2)
    throw std::domain_error("code has 2^" + std::to_string(code.size_log2()) +
                            " codewords, above the enumeration bound 2^" +
                            std::to_string(bound_log2));
  const CodeContext& ctx = *code.ctx;
  int m = ctx.factor_count();
  int n = ctx.n;
  // per-factor contribution tables e_i * v
  std::vector<std::vector<Codeword>> tables(static_cast<size_t>(m));
  std::vector<PolyR> elems;
  for (int i = 0; i < m; ++i) {
    detail::local_ideal_elements(ctx, static_cast<size_t>(i), code.locals[static_cast<size_t>(i)],
                                 elems);
    auto& tab = tables[static_cast<size_t>(i)];
    tab.reserve(elems.size());
    for (const auto& v : elems) {
      CyclicPolyR contrib = ctx.idem_r.idempotents[static_cast<size_t>(i)] * CyclicPolyR(n, v);
      tab.push_back(contrib.c);
    }
  }
  std::vector<Codeword> stack(static_cast<size_t>(m) + 1,
                              Codeword(static_cast<size_t>(n), RingElement::zero()));
  detail::enum_rec(tables, 0, stack, n, fn);
}

inline WordSet codeword_set(const CyclicCode& code,
                            uint64_t bound_log2 = default_enum_bound_log2()) {
  WordSet s;
  s.reserve(size_t{1} << std::min<int>(code.size_log2(), 21));
  for_each_codeword(code, [&](const Codeword& w) { s.insert(pack_word(w)); }, bound_log2);
  if (s.size() != (size_t{1} << code.size_log2()))
    throw std::logic_error("enumeration size mismatch against the local size formula");
  return s;
}

enum class Metric { Hamming, Lee };

inline int min_distance(const CyclicCode& code, Metric metric,
                        uint64_t bound_log2 = default_enum_bound_log2()) {
  if (code.is_zero()) throw std::domain_error("minimum distance of the zero code is undefined");
  int best = INT32_MAX;
  for_each_codeword(
      code,
      [&](const Codeword& w) {
        int hw = hamming_weight(w);
        if (hw == 0) return;
        int val = metric == Metric::Hamming ? hw : lee_weight(w);
        if (val < best) best = val;
      },
      bound_log2);
  return best;
}

// ---------------------------------------------------------------------------
// Z4 codes: enumeration for oracles and the additive-pair constructions.

template <class Fn>
void for_each_z4_codeword(const Z4CyclicCode& code, Fn&& fn,
                          uint64_t bound_log2 = default_enum_bound_log2()) {
  if (static_cast<uint64_t>(code.size_log2()) > bound_log2)
    throw std::domain_error("Z4 code above the enumeration bound");
  const CodeContext& ctx = *code.ctx;
  int m = ctx.factor_count(), n = ctx.n;
  std::vector<std::vector<std::vector<Z4>>> tables(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    int d = ctx.factor_degree(i);
    std::vector<PolyZ4> elems;
    switch (code.locals[static_cast<size_t>(i)]) {
      case Z4Local::Zero: elems.push_back(PolyZ4::zero()); break;
      case Z4Local::Two:
        for (uint64_t k = 0; k < (uint64_t{1} << d); ++k) {
          std::vector<Z4> c(static_cast<size_t>(d));
          for (int j = 0; j < d; ++j) c[j] = (k >> j) & 1 ? Z4{2} : Z4{0};
          elems.push_back(PolyZ4{std::move(c)});
        }
        break;
      case Z4Local::One:
        for (uint64_t k = 0; k < (uint64_t{1} << (2 * d)); ++k) {
          std::vector<Z4> c(static_cast<size_t>(d));
          for (int j = 0; j < d; ++j) c[j] = Z4{static_cast<int>((k >> (2 * j)) & 3)};
          elems.push_back(PolyZ4{std::move(c)});
        }
        break;
    }
    auto& tab = tables[static_cast<size_t>(i)];
    for (const auto& v : elems) {
      CyclicPolyZ4 contrib = ctx.idem_z4.idempotents[static_cast<size_t>(i)] * CyclicPolyZ4(n, v);
      tab.push_back(contrib.c);
    }
  }
  std::vector<Z4> acc(static_cast<size_t>(n), Z4::zero());
  std::function<void(int, std::vector<Z4>&)> rec = [&](int level, std::vector<Z4>& sum) {
    if (level == m) {
      fn(const_cast<const std::vector<Z4>&>(sum));
      return;
    }
    for (const auto& contrib : tables[static_cast<size_t>(level)]) {
      std::vector<Z4> next = sum;
      for (int j = 0; j < n; ++j) next[static_cast<size_t>(j)] = next[static_cast<size_t>(j)] + contrib[static_cast<size_t>(j)];
      rec(level + 1, next);
    }
  };
  rec(0, acc);
}

// ---------------------------------------------------------------------------
// Minimal generator counts (rank oracles).  Nakayama over the local scalars:
// greedily pick codewords outside span(G) + J*C until that span covers C,
// where J is the maximal ideal of the scalar ring (<2,u> for R, <2> for Z4).

namespace detail {

// Grow a Z4-module span by one generator (and by u*v when spanning over R).
inline void span_adjoin(WordSet& span, PackedWord v, bool over_r) {
  auto close_with = [&](PackedWord w) {
    if (w == 0 || span.count(w)) return;
    PackedWord w2 = packed_double(w), w3 = packed_add(w2, w);
    std::vector<PackedWord> base(span.begin(), span.end());
    for (PackedWord s : base) {
      span.insert(packed_add(s, w));
      span.insert(packed_add(s, w2));
      span.insert(packed_add(s, w3));
    }
  };
  close_with(v);
  if (over_r) close_with(packed_times_u(v));
}

}  // namespace detail

// Minimum number of module generators of C over the chosen scalars (R, or Z4
// when over_r is false), found by exhaustive span growth.
inline int oracle_min_generators(const CyclicCode& code, bool over_r,
                                 uint64_t bound_log2 = 20) {
  WordSet all = codeword_set(code, bound_log2);
  if (all.size() == 1) return 0;
  int n = code.n();
  // J*C is spanned as a Z4-module by 2*(shifts) and, over R, u*(shifts)
  WordSet span;
  span.insert(0);
  for (const CyclicPolyR& gen : {code.first_generator(), code.second_generator()})
    for (int sft = 0; sft < n; ++sft) {
      PackedWord w = pack_word(gen.shifted(sft).c);
      detail::span_adjoin(span, packed_double(w), over_r);
      if (over_r) detail::span_adjoin(span, packed_times_u(w), over_r);
    }

  WordSet picked_span;
  picked_span.insert(0);
  int picked = 0;
  std::vector<PackedWord> order(all.begin(), all.end());
  std::sort(order.begin(), order.end());
  for (PackedWord cand : order) {
    if (span.size() == all.size()) break;
    if (span.count(cand)) continue;
    ++picked;
    detail::span_adjoin(span, cand, over_r);
    detail::span_adjoin(picked_span, cand, over_r);
  }
  if (span.size() != all.size()) throw std::logic_error("rank oracle: span never covered C");
  // Nakayama: the greedy picks alone must already span C
  if (picked_span.size() != all.size())
    throw std::logic_error("rank oracle: greedy picks do not span C");
  return picked;
}

// ---------------------------------------------------------------------------

struct RankReport {
  int k1 = 0, k2 = 0;  // degrees of the canonical g and a
  std::optional<int> general_rank;   // 2n - k1 - k2 (theorem-form, Z4 spanning)
  std::optional<int> refined_rank;   // n - k2 (g regular, a monic; R spanning)
  int first_shifts = 0, second_shifts = 0;  // sizes of the returned spanning set
  std::vector<CyclicPolyR> spanning;
  std::optional<int> oracle_r_rank;    // greedy minimum over R
  std::optional<int> oracle_z4_rank;   // greedy minimum over Z4
  bool refined_matches_oracle = true;
  bool general_matches_oracle = true;
};

inline RankReport rank_and_spanning(const CyclicCode& code,
                                    std::optional<uint64_t> oracle_bound_log2 = 20) {
  RankReport rep;
  int n = code.n();
  rep.k1 = code.g.degree();
  rep.k2 = code.a.degree();
  bool refined = !code.g.is_zero() && is_regular(code.g) && code.a.is_monic() &&
                 rep.k1 < n && rep.k2 <= rep.k1;
  bool general_ok = rep.k1 >= 0 && rep.k2 >= 0 && rep.k1 < n && rep.k2 < n;
  if (general_ok) rep.general_rank = 2 * n - rep.k1 - rep.k2;
  if (refined) rep.refined_rank = n - rep.k2;
  CyclicPolyR gp = code.first_generator(), ua = code.second_generator();
  rep.first_shifts = general_ok ? n - rep.k1 : n;
  rep.second_shifts = refined ? rep.k1 - rep.k2 : (general_ok ? n - rep.k2 : n);
  for (int j = 0; j < rep.first_shifts; ++j) rep.spanning.push_back(gp.shifted(j));
  for (int j = 0; j < rep.second_shifts; ++j) rep.spanning.push_back(ua.shifted(j));
  if (oracle_bound_log2 && static_cast<uint64_t>(code.size_log2()) <= *oracle_bound_log2) {
    rep.oracle_r_rank = oracle_min_generators(code, /*over_r=*/true, *oracle_bound_log2);
    rep.oracle_z4_rank = oracle_min_generators(code, /*over_r=*/false, *oracle_bound_log2);
    if (rep.refined_rank) rep.refined_matches_oracle = *rep.refined_rank == *rep.oracle_r_rank;
    if (rep.general_rank) rep.general_matches_oracle = *rep.general_rank == *rep.oracle_z4_rank;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Idempotent generators.

// For C = <g> with g | x^n - 1: e = lambda1 * g with lambda1 from the Bezout
// identity; for C = <ug> the generator is u*e.
inline CyclicPolyR idempotent_generator(const CyclicCode& code) {
  bool free_case = true, u_case = true;
  for (auto l : code.locals) {
    if (l != IdealKind::Zero && l != IdealKind::Unit) free_case = false;
    if (l != IdealKind::Zero && l != IdealKind::U) u_case = false;
  }
  if (!free_case && !u_case)
    throw std::domain_error("idempotent generator requires <g> or <ug> with g | x^n-1");
  PolyR gp = PolyR::one();
  for (size_t i = 0; i < code.locals.size(); ++i)
    if (code.locals[i] == IdealKind::Zero) gp = gp * code.ctx->r.factors[i];
  auto [hhat, rem] = PolyR::xn_minus_1(code.n()).divmod_monic(gp);
  if (!rem.is_zero()) throw std::logic_error("free generator does not divide x^n-1");
  auto bez = bezout_lift(gp, hhat);
  if (!bez) throw std::logic_error("divisor pair not coprime");
  CyclicPolyR e(code.n(), bez->first * gp);
  CyclicPolyR check = e * e - e;
  if (!check.is_zero()) throw std::logic_error("idempotent law failed");
  if (free_case) {
    CyclicPolyR ge = CyclicPolyR(code.n(), gp) * e;
    if (!(ge == CyclicPolyR(code.n(), gp))) throw std::logic_error("g e != g");
    return e;
  }
  return cyclic_times_u(e);
}

// Dual idempotent of a free code: 1 - e(x^{-1}).
inline CyclicPolyR dual_idempotent(const CyclicPolyR& e) {
  return CyclicPolyR::one(e.n) - e.reciprocal();
}

// ---------------------------------------------------------------------------
// BCH-style bound from runs of consecutive roots of unity.

struct BchResult {
  std::vector<int> root_exponents;  // i with g(xi^i) = 0, xi an n-th root
  int longest_run = 0;              // longest cyclic run of consecutive exponents
  int literal_bound = 0;            // the proposition read literally: d >= run
  int bound = 1;                    // run + 1, matching the worked example
};

inline BchResult bch_bound(const CyclicCode& code, const GaloisRing& gr) {
  if (!code.is_free())
    throw std::domain_error("bch bound requires a free principal code (monic divisor generator)");
  int n = code.n();
  if (gr.group_order() % static_cast<uint64_t>(n) != 0)
    throw std::domain_error("bch bound: n must divide 2^r-1 for the chosen Galois ring");
  PolyR gen = code.free_generator();
  uint64_t step = gr.group_order() / static_cast<uint64_t>(n);
  BchResult res;
  std::vector<bool> is_root(static_cast<size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    GrElem root = gr.teich(step * static_cast<uint64_t>(i));
    if (gr.eval(gen, root).is_zero()) {
      is_root[static_cast<size_t>(i)] = true;
      res.root_exponents.push_back(i);
    }
  }
  int run = 0;
  if (static_cast<int>(res.root_exponents.size()) == n) {
    run = n;  // zero code: every exponent is a root
  } else {
    for (int start = 0; start < n; ++start) {
      if (is_root[static_cast<size_t>(start)] &&
          !is_root[static_cast<size_t>((start + n - 1) % n)]) {
        int len = 0;
        while (is_root[static_cast<size_t>((start + len) % n)]) ++len;
        run = std::max(run, len);
      }
    }
  }
  res.longest_run = run;
  res.literal_bound = run;
  res.bound = run + 1;
  return res;
}

// ---------------------------------------------------------------------------
// Enumeration of all cyclic codes: one local ideal per factor, 7^m in all.

inline uint64_t count_cyclic_codes(int n, int max_ord = kDefaultMaxOrd) {
  require_odd(n);
  size_t m = cyclotomic_cosets(n).size();
  (void)max_ord;
  if (m > 22) throw std::domain_error("7^m exceeds the counting range");
  uint64_t c = 1;
  for (size_t i = 0; i < m; ++i) c *= 7;
  return c;
}

template <class Fn>
void enumerate_cyclic_codes(std::shared_ptr<const CodeContext> ctx, Fn&& fn) {
  int m = ctx->factor_count();
  std::vector<IdealKind> ls(static_cast<size_t>(m), IdealKind::Zero);
  const IdealKind order[7] = {IdealKind::Zero,     IdealKind::TwoU,    IdealKind::U,
                              IdealKind::Two,      IdealKind::TwoPlusU, IdealKind::Maximal,
                              IdealKind::Unit};
  std::function<void(int)> rec = [&](int level) {
    if (level == m) {
      fn(CyclicCode::from_locals(ctx, ls));
      return;
    }
    for (auto k : order) {
      ls[static_cast<size_t>(level)] = k;
      rec(level + 1);
    }
  };
  rec(0);
}

// ---------------------------------------------------------------------------
// Z4-module freeness.

struct Z4FreenessReport {
  bool c_free = false;            // C as a Z4-module (local criterion)
  std::optional<bool> c_free_oracle;  // |C| == |2C|^2 by enumeration
  bool res_free = false;          // C1 = Res(C) as a Z4 code
  bool tor_free = false;          // C2 = Tor(C) as a Z4 code
  bool components_imply_c = true; // instance check of the sufficiency theorem
  bool r_free_implies_res = true; // instance check: C R-free => Res Z4-free
};

inline Z4FreenessReport z4_freeness_report(const CyclicCode& code,
                                           std::optional<uint64_t> oracle_bound_log2 = 20) {
  Z4FreenessReport rep;
  rep.c_free = true;
  for (auto l : code.locals)
    if (l == IdealKind::TwoU || l == IdealKind::Two || l == IdealKind::Maximal)
      rep.c_free = false;
  rep.res_free = code.res_code().is_free();
  rep.tor_free = code.tor_code().is_free();
  if (oracle_bound_log2 && static_cast<uint64_t>(code.size_log2()) <= *oracle_bound_log2) {
    WordSet all = codeword_set(code, *oracle_bound_log2);
    WordSet doubled;
    for_each_codeword(
        code,
        [&](const Codeword& w) {
          Codeword two(w.size());
          for (size_t j = 0; j < w.size(); ++j) two[j] = RingElement{Z4{2}, Z4{0}} * w[j];
          doubled.insert(pack_word(two));
        },
        *oracle_bound_log2);
    rep.c_free_oracle = all.size() == doubled.size() * doubled.size();
    if (*rep.c_free_oracle != rep.c_free)
      throw std::logic_error("Z4-freeness: local criterion disagrees with the module oracle");
  }
  if (rep.res_free && rep.tor_free && !rep.c_free) rep.components_imply_c = false;
  if (code.is_free() && !rep.res_free) rep.r_free_implies_res = false;
  return rep;
}

}  // namespace ru4
