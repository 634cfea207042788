#pragma once

// JSON forms for the wire-facing types.  Polynomials carry ascending
// coefficient lists: plain integers over F2/Z4 and [a,b] pairs over R.

#include <json.hpp>

#include "ru4/codes.hpp"
#include "ru4/factor.hpp"
#include "ru4/poly.hpp"
#include "ru4/ring.hpp"

namespace ru4 {

inline nlohmann::json to_json(const PolyR& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (auto x : f.c) coeffs.push_back({x.a.v, x.b.v});
  return {{"ring", "R"}, {"coeffs", coeffs}};
}

inline nlohmann::json to_json(const PolyZ4& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (auto x : f.c) coeffs.push_back(x.v);
  return {{"ring", "Z4"}, {"coeffs", coeffs}};
}

inline nlohmann::json to_json(const PolyF2& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (auto x : f.c) coeffs.push_back(x.v);
  return {{"ring", "F2"}, {"coeffs", coeffs}};
}

inline RingTag ring_tag_from_json(const nlohmann::json& j) {
  std::string r = j.at("ring").get<std::string>();
  if (r == "F2") return RingTag::F2;
  if (r == "Z4") return RingTag::Z4;
  if (r == "R") return RingTag::R;
  throw ParseError("unknown ring tag '" + r + "'");
}

inline PolyR poly_r_from_json(const nlohmann::json& j) {
  if (ring_tag_from_json(j) != RingTag::R) throw ParseError("expected ring R");
  std::vector<RingElement> c;
  for (const auto& e : j.at("coeffs")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("R coefficients are [a,b] pairs");
    c.push_back(RingElement{Z4::from_int(e[0].get<long long>()),
                            Z4::from_int(e[1].get<long long>())});
  }
  return PolyR{std::move(c)};
}

inline PolyZ4 poly_z4_from_json(const nlohmann::json& j) {
  if (ring_tag_from_json(j) != RingTag::Z4) throw ParseError("expected ring Z4");
  std::vector<Z4> c;
  for (const auto& e : j.at("coeffs")) c.push_back(Z4::from_int(e.get<long long>()));
  return PolyZ4{std::move(c)};
}

inline PolyF2 poly_f2_from_json(const nlohmann::json& j) {
  if (ring_tag_from_json(j) != RingTag::F2) throw ParseError("expected ring F2");
  std::vector<F2> c;
  for (const auto& e : j.at("coeffs")) c.push_back(F2::from_int(e.get<long long>()));
  return PolyF2{std::move(c)};
}

template <class T>
nlohmann::json to_json(const Factorization<T>& fac, bool paper_style = false) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : fac.factors) factors.push_back(to_string(f, paper_style));
  nlohmann::json cosets = nlohmann::json::array();
  for (const auto& cs : fac.cosets) cosets.push_back(cs.members);
  const char* ring = std::is_same_v<T, F2> ? "F2" : (std::is_same_v<T, Z4> ? "Z4" : "R");
  return {{"n", fac.n}, {"ring", ring}, {"factors", factors}, {"cosets", cosets}};
}

// Exact |C| = 2^e as a decimal string, for sizes beyond unsigned range.
inline std::string pow2_decimal(int e) {
  std::vector<uint8_t> digits{1};
  for (int i = 0; i < e; ++i) {
    int carry = 0;
    for (auto& d : digits) {
      int v = d * 2 + carry;
      d = static_cast<uint8_t>(v % 10);
      carry = v / 10;
    }
    if (carry) digits.push_back(static_cast<uint8_t>(carry));
  }
  std::string s;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) s.push_back(char('0' + *it));
  return s;
}

inline nlohmann::json code_summary_json(const CyclicCode& code,
                                        std::optional<int> dh = std::nullopt,
                                        std::optional<int> dlee = std::nullopt) {
  nlohmann::json summary;
  int e = code.size_log2();
  if (e < 63)
    summary["size"] = uint64_t{1} << e;
  else
    summary["size"] = pow2_decimal(e);
  summary["free"] = code.is_free();
  if (code.is_free()) summary["free_rank"] = code.free_rank();
  if (dh) summary["dH"] = *dh;
  if (dlee) summary["dLee"] = *dlee;
  return summary;
}

inline nlohmann::json to_json(const CyclicCode& code, bool paper_style = false,
                              std::optional<int> dh = std::nullopt,
                              std::optional<int> dlee = std::nullopt) {
  return {{"n", code.n()},
          {"g", to_string(code.g, paper_style)},
          {"p", to_string(code.p, paper_style)},
          {"a", to_string(code.a, paper_style)},
          {"summary", code_summary_json(code, dh, dlee)}};
}

inline nlohmann::json to_json(const BchResult& r) {
  return {{"root_exponents", r.root_exponents},
          {"longest_run", r.longest_run},
          {"literal_bound", r.literal_bound},
          {"bound", r.bound}};
}

}  // namespace ru4
