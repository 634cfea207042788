#pragma once

// Subcommand bodies for the ru4 CLI.

#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ru4/codes.hpp"
#include "ru4/factor.hpp"
#include "ru4/galois.hpp"
#include "ru4/json_io.hpp"
#include "ru4/poly.hpp"
#include "ru4/ring.hpp"

namespace ru4::cli {

struct Options {
  int n = 0;
  int exponent = 0;
  int galois_r = 0;
  std::string ring;
  std::string metric = "hamming";
  std::string g_text, p_text, a_text, modulus_text;
  uint64_t max_enum = uint64_t{1} << 24;
  bool json = false;
  bool paper_style = false;
  bool count_only = false;
};

inline uint64_t bound_log2_of(uint64_t max_enum) {
  uint64_t b = 0;
  while ((uint64_t{1} << (b + 1)) <= max_enum && b < 62) ++b;
  return b;
}

inline RingTag parse_ring(const std::string& s) {
  if (s == "f2" || s == "F2") return RingTag::F2;
  if (s == "z4" || s == "Z4") return RingTag::Z4;
  if (s == "r" || s == "R") return RingTag::R;
  throw ParseError("unknown ring '" + s + "' (expected f2, z4 or r)");
}

inline void cmd_factor(const Options& opt, std::ostream& out) {
  RingTag tag = parse_ring(opt.ring);
  auto emit = [&](const auto& fac) {
    if (opt.json) {
      out << to_json(fac, opt.paper_style).dump() << "\n";
      return;
    }
    out << "x^" << opt.n << "-1 over " << ring_name(tag) << " =";
    for (const auto& f : fac.factors) out << " (" << to_string(f, opt.paper_style) << ")";
    out << "\n";
    for (size_t i = 0; i < fac.factors.size(); ++i) {
      out << "coset {";
      for (size_t j = 0; j < fac.cosets[i].members.size(); ++j)
        out << (j ? "," : "") << fac.cosets[i].members[j];
      out << "} -> " << to_string(fac.factors[i], opt.paper_style) << "\n";
    }
  };
  if (tag == RingTag::F2)
    emit(factor_xn1_f2(opt.n));
  else if (tag == RingTag::Z4)
    emit(factor_xn1_z4(opt.n));
  else
    emit(factor_xn1_r(opt.n));
}

inline void cmd_lift(const Options& opt, std::ostream& out) {
  RingTag tag = parse_ring(opt.ring);
  if (tag == RingTag::F2) throw ParseError("lift target must be z4 or r");
  PolyF2 g = parse_poly_f2(opt.g_text);
  PolyZ4 lifted = hensel_lift_z4(g);
  if (opt.json) {
    nlohmann::json j{{"source", to_string(g)},
                     {"ring", ring_name(tag)},
                     {"lift", tag == RingTag::Z4 ? to_string(lifted, opt.paper_style)
                                                 : to_string(lift_to_r(lifted), opt.paper_style)}};
    out << j.dump() << "\n";
  } else {
    out << to_string(lifted, opt.paper_style) << "\n";
  }
}

inline GaloisRing make_galois(int r, const std::string& modulus_text) {
  if (modulus_text.empty()) return GaloisRing(r);
  return GaloisRing(r, parse_poly_r(modulus_text));
}

inline void cmd_galois(const Options& opt, std::ostream& out) {
  GaloisRing gr = make_galois(opt.galois_r, opt.modulus_text);
  uint64_t top = gr.group_order();
  if (opt.json) {
    nlohmann::json powers = nlohmann::json::array();
    for (uint64_t k = 0; k <= top; ++k) powers.push_back(gr.to_string(gr.pow(gr.xi(), k)));
    nlohmann::json j{{"r", gr.degree()},
                     {"modulus", to_string(gr.modulus(), opt.paper_style)},
                     {"xi_order", top},
                     {"powers", powers}};
    out << j.dump() << "\n";
    return;
  }
  out << "GR(R," << gr.degree() << "), modulus " << to_string(gr.modulus(), opt.paper_style)
      << ", |GR| = 16^" << gr.degree() << ", xi has order " << top << "\n";
  int col = 0;
  for (uint64_t k = static_cast<uint64_t>(gr.degree()); k <= top; ++k) {
    out << "xi^" << k << " = " << gr.to_string(gr.pow(gr.xi(), k));
    ++col;
    out << (col % 3 == 0 || k == top ? "\n" : ",  ");
  }
}

inline void cmd_roots(const Options& opt, std::ostream& out) {
  require_odd(opt.n);
  int r = opt.galois_r > 0 ? opt.galois_r : ord2_mod(opt.n);
  GaloisRing gr = make_galois(r, opt.modulus_text);
  auto roots = gr.nth_roots(opt.n);
  uint64_t step = gr.group_order() / static_cast<uint64_t>(opt.n);
  if (opt.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& z : roots) arr.push_back(gr.to_string(z));
    nlohmann::json j{{"n", opt.n}, {"r", r}, {"step", step}, {"roots", arr}};
    out << j.dump() << "\n";
    return;
  }
  out << opt.n << "-th roots of unity in GR(R," << r << "), generated by xi^" << step << ":\n";
  for (size_t k = 0; k < roots.size(); ++k)
    out << "(xi^" << step << ")^" << k << " = " << gr.to_string(roots[k]) << "\n";
}

inline void cmd_minpoly(const Options& opt, std::ostream& out) {
  require_odd(opt.n);
  int r = opt.galois_r > 0 ? opt.galois_r : ord2_mod(opt.n);
  GaloisRing gr = make_galois(r, opt.modulus_text);
  PolyR m = gr.minimal_polynomial(opt.exponent, opt.n);
  if (opt.json) {
    nlohmann::json j{{"n", opt.n}, {"i", opt.exponent}, {"minpoly", to_string(m, opt.paper_style)}};
    out << j.dump() << "\n";
    return;
  }
  out << "M_" << opt.exponent << "(x) = " << to_string(m, opt.paper_style) << "\n";
}

inline void cmd_poly(const Options& opt, std::ostream& out) {
  RingTag tag = parse_ring(opt.ring);
  if (tag == RingTag::R) {
    PolyR f = parse_poly_r(opt.g_text);
    if (opt.json)
      out << to_json(f).dump() << "\n";
    else
      out << to_string(f, opt.paper_style) << "\n";
  } else if (tag == RingTag::Z4) {
    PolyZ4 f = parse_poly_z4(opt.g_text);
    if (opt.json)
      out << to_json(f).dump() << "\n";
    else
      out << to_string(f, opt.paper_style) << "\n";
  } else {
    PolyF2 f = parse_poly_f2(opt.g_text);
    if (opt.json)
      out << to_json(f).dump() << "\n";
    else
      out << to_string(f) << "\n";
  }
}

// Build the code <g + up, ua> from the text options.
inline CyclicCode code_from_options(const Options& opt) {
  require_odd(opt.n);
  auto ctx = CodeContext::make(opt.n);
  std::vector<CyclicPolyR> gens;
  PolyR g = opt.g_text.empty() ? PolyR::zero() : parse_poly_r(opt.g_text);
  PolyR p = opt.p_text.empty() ? PolyR::zero() : parse_poly_r(opt.p_text);
  CyclicPolyR first = CyclicPolyR(opt.n, g) + cyclic_times_u(CyclicPolyR(opt.n, p));
  gens.push_back(first);
  if (!opt.a_text.empty())
    gens.push_back(cyclic_times_u(CyclicPolyR(opt.n, parse_poly_r(opt.a_text))));
  return CyclicCode::from_generators(ctx, gens);
}

inline void print_size(std::ostream& out, int log2e) {
  if (log2e < 63)
    out << (uint64_t{1} << log2e);
  else
    out << pow2_decimal(log2e);
  out << " (2^" << log2e << ")";
}

inline void cmd_analyze(const Options& opt, std::ostream& out) {
  CyclicCode code = code_from_options(opt);
  uint64_t bound = bound_log2_of(opt.max_enum);
  std::optional<int> dh;
  if (!code.is_zero() && static_cast<uint64_t>(code.size_log2()) <= bound)
    dh = min_distance(code, Metric::Hamming, bound);
  if (opt.json) {
    out << to_json(code, opt.paper_style, dh).dump() << "\n";
    return;
  }
  out << "n = " << code.n() << "\n";
  out << "canonical g = " << to_string(code.g, opt.paper_style) << "\n";
  out << "canonical p = " << to_string(code.p, opt.paper_style) << "\n";
  out << "canonical a = " << to_string(code.a, opt.paper_style) << "\n";
  out << "|C| = ";
  print_size(out, code.size_log2());
  out << "\n";
  if (code.is_free())
    out << "free over R: yes, free rank " << code.free_rank() << "\n";
  else
    out << "free over R: no\n";
  if (dh) out << "dH = " << *dh << "\n";
}

inline void cmd_distance(const Options& opt, std::ostream& out) {
  CyclicCode code = code_from_options(opt);
  Metric metric;
  if (opt.metric == "hamming")
    metric = Metric::Hamming;
  else if (opt.metric == "lee")
    metric = Metric::Lee;
  else
    throw ParseError("unknown metric '" + opt.metric + "'");
  int d = min_distance(code, metric, bound_log2_of(opt.max_enum));
  if (opt.json) {
    nlohmann::json j{{"n", code.n()}, {"metric", opt.metric}, {"distance", d}};
    out << j.dump() << "\n";
    return;
  }
  out << (metric == Metric::Hamming ? "dH = " : "dLee = ") << d << "\n";
}

inline void cmd_dual(const Options& opt, std::ostream& out) {
  CyclicCode code = code_from_options(opt);
  CyclicCode dual = code.dual();
  if (opt.json) {
    out << to_json(dual, opt.paper_style).dump() << "\n";
    return;
  }
  out << "dual g = " << to_string(dual.g, opt.paper_style) << "\n";
  out << "dual p = " << to_string(dual.p, opt.paper_style) << "\n";
  out << "dual a = " << to_string(dual.a, opt.paper_style) << "\n";
  out << "|C~| = ";
  print_size(out, dual.size_log2());
  out << "\n";
}

inline void cmd_idempotent(const Options& opt, std::ostream& out) {
  CyclicCode code = code_from_options(opt);
  CyclicPolyR e = idempotent_generator(code);
  if (opt.json) {
    nlohmann::json j{{"n", code.n()}, {"idempotent", to_string(e.to_poly(), opt.paper_style)}};
    out << j.dump() << "\n";
    return;
  }
  out << "e = " << to_string(e.to_poly(), opt.paper_style) << "\n";
}

inline void cmd_gray(const Options& opt, std::ostream& out) {
  CyclicCode code = code_from_options(opt);
  uint64_t bound = bound_log2_of(opt.max_enum);
  std::optional<int> min_lee;
  std::optional<uint64_t> image_size;
  if (static_cast<uint64_t>(code.size_log2()) <= bound) {
    WordSet img;
    int best = INT32_MAX;
    for_each_codeword(
        code,
        [&](const Codeword& w) {
          std::vector<Z4> im = gray_image(w);
          int lw = lee_weight_z4(im);
          if (lw > 0 && lw < best) best = lw;
          PackedWord key = 0;
          for (size_t i = 0; i < im.size(); ++i) key |= PackedWord(im[i].v) << (2 * i);
          img.insert(key);
        },
        bound);
    image_size = img.size();
    if (best != INT32_MAX) min_lee = best;
  }
  if (opt.json) {
    nlohmann::json j{{"n", code.n()}, {"gray_length", 2 * code.n()}};
    if (image_size) j["image_size"] = *image_size;
    if (min_lee) j["min_lee"] = *min_lee;
    out << j.dump() << "\n";
    return;
  }
  out << "Gray image lives in Z4^" << 2 * code.n() << "\n";
  if (image_size) out << "|phi(C)| = " << *image_size << "\n";
  if (min_lee) out << "min Lee weight = " << *min_lee << "\n";
}

inline void cmd_enumerate(const Options& opt, std::ostream& out) {
  require_odd(opt.n);
  if (opt.count_only) {
    out << count_cyclic_codes(opt.n) << "\n";
    return;
  }
  auto ctx = CodeContext::make(opt.n);
  enumerate_cyclic_codes(ctx, [&](const CyclicCode& code) {
    if (opt.json) {
      out << to_json(code, opt.paper_style).dump() << "\n";
    } else {
      out << "g = " << to_string(code.g, opt.paper_style)
          << " | p = " << to_string(code.p, opt.paper_style)
          << " | a = " << to_string(code.a, opt.paper_style) << " | size 2^"
          << code.size_log2() << "\n";
    }
  });
}

inline void cmd_bch(const Options& opt, std::ostream& out) {
  CyclicCode code = code_from_options(opt);
  int r = opt.galois_r > 0 ? opt.galois_r : ord2_mod(opt.n);
  GaloisRing gr = make_galois(r, opt.modulus_text);
  BchResult res = bch_bound(code, gr);
  if (opt.json) {
    out << to_json(res).dump() << "\n";
    return;
  }
  out << "roots at exponents {";
  for (size_t i = 0; i < res.root_exponents.size(); ++i)
    out << (i ? "," : "") << res.root_exponents[i];
  out << "}\n";
  out << "longest consecutive run = " << res.longest_run << "\n";
  out << "d(C) >= " << res.bound << "\n";
}

}  // namespace ru4::cli
