#pragma once

// Exact arithmetic in the local ring R = Z4 + uZ4 with u^2 = 0, its ideal
// lattice, and the symbol-level Gray map / Lee weight.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ru4 {

enum class RingTag { F2, Z4, R };

inline const char* ring_name(RingTag t) {
  switch (t) {
    case RingTag::F2: return "F2";
    case RingTag::Z4: return "Z4";
    default: return "R";
  }
}

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Residue mod 2.
struct F2 {
  uint8_t v = 0;

  constexpr F2() = default;
  constexpr explicit F2(int x) : v(static_cast<uint8_t>(x & 1)) {}

  static constexpr F2 zero() { return F2{}; }
  static constexpr F2 one() { return F2{1}; }
  static F2 from_int(long long x) { return F2{static_cast<int>(((x % 2) + 2) % 2)}; }

  constexpr bool is_zero() const { return v == 0; }
  constexpr bool is_unit() const { return v == 1; }
  F2 inv() const {
    if (!is_unit()) throw std::domain_error("F2: 0 is not invertible");
    return *this;
  }
  constexpr uint8_t f2_bit() const { return v; }
  static constexpr F2 from_f2_bit(uint8_t b) { return F2{b}; }

  friend constexpr F2 operator+(F2 x, F2 y) { return F2{x.v ^ y.v}; }
  friend constexpr F2 operator-(F2 x, F2 y) { return F2{x.v ^ y.v}; }
  friend constexpr F2 operator*(F2 x, F2 y) { return F2{x.v & y.v}; }
  constexpr F2 operator-() const { return *this; }
  friend constexpr bool operator==(F2 x, F2 y) { return x.v == y.v; }
};

// Residue mod 4, the least nonnegative representative is stored.
struct Z4 {
  uint8_t v = 0;

  constexpr Z4() = default;
  constexpr explicit Z4(int x) : v(static_cast<uint8_t>(x & 3)) {}

  static constexpr Z4 zero() { return Z4{}; }
  static constexpr Z4 one() { return Z4{1}; }
  static Z4 from_int(long long x) { return Z4{static_cast<int>(((x % 4) + 4) % 4)}; }

  constexpr bool is_zero() const { return v == 0; }
  constexpr bool is_unit() const { return (v & 1) != 0; }
  Z4 inv() const {
    if (!is_unit()) throw std::domain_error("Z4: " + std::to_string(v) + " is not invertible");
    return *this;  // 1 and 3 are self-inverse mod 4
  }
  constexpr uint8_t f2_bit() const { return v & 1; }
  static constexpr Z4 from_f2_bit(uint8_t b) { return Z4{b}; }

  friend constexpr Z4 operator+(Z4 x, Z4 y) { return Z4{x.v + y.v}; }
  friend constexpr Z4 operator-(Z4 x, Z4 y) { return Z4{x.v + 4 - y.v}; }
  friend constexpr Z4 operator*(Z4 x, Z4 y) { return Z4{x.v * y.v}; }
  constexpr Z4 operator-() const { return Z4{4 - v}; }
  friend constexpr bool operator==(Z4 x, Z4 y) { return x.v == y.v; }
};

inline int lee_weight(Z4 x) { return x.v == 3 ? 1 : x.v; }

// An element a + ub of R.  u^2 = 0 is baked into the multiplication rule.
struct RingElement {
  Z4 a;  // Z4 part
  Z4 b;  // u-coefficient

  constexpr RingElement() = default;
  constexpr RingElement(Z4 a_, Z4 b_) : a(a_), b(b_) {}
  constexpr explicit RingElement(int a_, int b_ = 0) : a(a_), b(b_) {}

  static constexpr RingElement zero() { return RingElement{}; }
  static constexpr RingElement one() { return RingElement{1, 0}; }
  static constexpr RingElement u() { return RingElement{0, 1}; }

  constexpr bool is_zero() const { return a.is_zero() && b.is_zero(); }
  constexpr bool is_unit() const { return a.is_unit(); }
  constexpr uint8_t f2_bit() const { return a.f2_bit(); }
  static constexpr RingElement from_f2_bit(uint8_t bit) { return RingElement{bit, 0}; }

  friend constexpr RingElement operator+(RingElement x, RingElement y) {
    return RingElement{x.a + y.a, x.b + y.b};
  }
  friend constexpr RingElement operator-(RingElement x, RingElement y) {
    return RingElement{x.a - y.a, x.b - y.b};
  }
  friend constexpr RingElement operator*(RingElement x, RingElement y) {
    return RingElement{x.a * y.a, x.a * y.b + x.b * y.a};
  }
  constexpr RingElement operator-() const { return RingElement{-a, -b}; }
  friend constexpr bool operator==(RingElement x, RingElement y) {
    return x.a == y.a && x.b == y.b;
  }

  // Index 0..15, used for tables and packing.
  constexpr uint8_t pack() const { return static_cast<uint8_t>(a.v | (b.v << 2)); }
  static constexpr RingElement unpack(uint8_t k) { return RingElement{k & 3, (k >> 2) & 3}; }

  RingElement inv() const;
};

inline std::vector<RingElement> all_elements_of_r() {
  std::vector<RingElement> out;
  out.reserve(16);
  for (int k = 0; k < 16; ++k) out.push_back(RingElement::unpack(static_cast<uint8_t>(k)));
  return out;
}

// Canonical textual form: "a" when b = 0, otherwise the u-part prints as
// "u", "2u", "3u" ("2+3u", "3u", "0").
inline std::string to_string(RingElement x) {
  if (x.b.is_zero()) return std::to_string(x.a.v);
  std::string up = x.b.v == 1 ? "u" : std::to_string(x.b.v) + "u";
  if (x.a.is_zero()) return up;
  return std::to_string(x.a.v) + "+" + up;
}

// ---------------------------------------------------------------------------
// The ideal lattice of R: six proper ideals plus R itself.

enum class IdealKind : uint8_t { Zero, TwoU, U, Two, TwoPlusU, Maximal, Unit };

struct IdealOfR {
  IdealKind tag;
  const char* name;
  std::vector<RingElement> elements;

  bool contains(RingElement x) const {
    for (auto e : elements)
      if (e == x) return true;
    return false;
  }
};

namespace detail {
inline std::vector<RingElement> principal_ideal(RingElement g) {
  std::vector<RingElement> out;
  for (auto r : all_elements_of_r()) {
    RingElement e = r * g;
    bool seen = false;
    for (auto s : out)
      if (s == e) seen = true;
    if (!seen) out.push_back(e);
  }
  return out;
}
}  // namespace detail

inline const std::array<IdealOfR, 7>& ideals_of_r() {
  static const std::array<IdealOfR, 7> table = [] {
    std::array<IdealOfR, 7> t{};
    t[0] = {IdealKind::Zero, "<0>", {RingElement::zero()}};
    t[1] = {IdealKind::TwoU, "<2u>", detail::principal_ideal(RingElement{0, 2})};
    t[2] = {IdealKind::U, "<u>", detail::principal_ideal(RingElement{0, 1})};
    t[3] = {IdealKind::Two, "<2>", detail::principal_ideal(RingElement{2, 0})};
    t[4] = {IdealKind::TwoPlusU, "<2+u>", detail::principal_ideal(RingElement{2, 1})};
    std::vector<RingElement> maximal;  // all non-units, since R is local
    for (auto x : all_elements_of_r())
      if (!x.is_unit()) maximal.push_back(x);
    t[5] = {IdealKind::Maximal, "<2,u>", maximal};
    t[6] = {IdealKind::Unit, "<1>", all_elements_of_r()};
    return t;
  }();
  return table;
}

inline const IdealOfR& ideal(IdealKind k) { return ideals_of_r()[static_cast<size_t>(k)]; }

// Smallest ideal containing x (Unit for units; Maximal is never principal).
inline IdealKind classify(RingElement x) {
  if (x.a.is_unit()) return IdealKind::Unit;
  if (!x.a.is_zero()) return x.b.is_unit() ? IdealKind::TwoPlusU : IdealKind::Two;
  if (x.b.is_unit()) return IdealKind::U;
  if (!x.b.is_zero()) return IdealKind::TwoU;
  return IdealKind::Zero;
}

inline bool ideal_subset(IdealKind x, IdealKind y) {
  static const auto table = [] {
    std::array<std::array<bool, 7>, 7> t{};
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) {
        bool sub = true;
        for (auto e : ideals_of_r()[i].elements)
          if (!ideals_of_r()[j].contains(e)) sub = false;
        t[i][j] = sub;
      }
    return t;
  }();
  return table[static_cast<size_t>(x)][static_cast<size_t>(y)];
}

// Smallest ideal containing both; the lattice is not a chain, so the middle
// layer <u>, <2>, <2+u> joins pairwise to <2,u>.
inline IdealKind ideal_join(IdealKind x, IdealKind y) {
  static const auto table = [] {
    std::array<std::array<IdealKind, 7>, 7> t{};
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) {
        IdealKind best = IdealKind::Unit;
        // ideals_of_r() is ordered by size, so the first superset of both is
        // the join.
        for (int k = 0; k < 7; ++k) {
          auto kk = static_cast<IdealKind>(k);
          if (ideal_subset(static_cast<IdealKind>(i), kk) &&
              ideal_subset(static_cast<IdealKind>(j), kk)) {
            best = kk;
            break;
          }
        }
        t[i][j] = best;
      }
    return t;
  }();
  return table[static_cast<size_t>(x)][static_cast<size_t>(y)];
}

inline RingElement RingElement::inv() const {
  if (!is_unit())
    throw std::domain_error("not a unit: " + ru4::to_string(*this) + " lies in " +
                            ideal(classify(*this)).name);
  return RingElement{a, -b};  // (a+ub)(a-ub) = a^2 = 1 for odd a
}

// ---------------------------------------------------------------------------
// Gray map and Lee weight at symbol level: a+ub -> (b, a+b).

struct GrayPair {
  Z4 first;
  Z4 second;
  friend bool operator==(GrayPair x, GrayPair y) {
    return x.first == y.first && x.second == y.second;
  }
};

inline GrayPair gray_symbol(RingElement x) { return GrayPair{x.b, x.a + x.b}; }

inline int lee_weight(RingElement x) {
  GrayPair g = gray_symbol(x);
  return lee_weight(g.first) + lee_weight(g.second);
}

inline int lee_distance(RingElement x, RingElement y) { return lee_weight(x - y); }

// ---------------------------------------------------------------------------
// Element parser for the canonical textual form ("2+3u", "3u", "-1", ...).

namespace detail {
inline bool parse_term(const std::string& s, size_t& pos, long long& coef, bool& has_u) {
  size_t start = pos;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    neg = s[pos] == '-';
    ++pos;
  }
  bool have_digits = false;
  long long val = 0;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
    val = val * 10 + (s[pos] - '0');
    have_digits = true;
    ++pos;
  }
  has_u = pos < s.size() && s[pos] == 'u';
  if (has_u) ++pos;
  if (!have_digits && !has_u) {
    pos = start;
    return false;
  }
  if (!have_digits) val = 1;
  coef = neg ? -val : val;
  return true;
}
}  // namespace detail

inline RingElement parse_element(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  if (s.empty()) throw ParseError("empty ring element");
  size_t pos = 0;
  long long a = 0, b = 0;
  while (pos < s.size()) {
    long long coef;
    bool has_u;
    if (!detail::parse_term(s, pos, coef, has_u))
      throw ParseError("bad ring element: '" + text + "'");
    (has_u ? b : a) += coef;
  }
  return RingElement{Z4::from_int(a), Z4::from_int(b)};
}

}  // namespace ru4
