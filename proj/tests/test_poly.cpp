#include <catch_amalgamated.hpp>

#include <random>

#include "ru4/json_io.hpp"
#include "ru4/poly.hpp"

using namespace ru4;

namespace {

PolyR pr(const std::string& s) { return parse_poly_r(s); }
PolyZ4 pz(const std::string& s) { return parse_poly_z4(s); }

PolyR random_poly_r(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(0, 15);
  std::vector<RingElement> c(static_cast<size_t>(deg(rng)) + 1);
  for (auto& x : c) x = RingElement::unpack(static_cast<uint8_t>(coef(rng)));
  return PolyR{std::move(c)};
}

}  // namespace

TEST_CASE("arithmetic examples") {
  CHECK(pz("x+3") * pz("x^2+x+1") == pz("x^3+3"));  // telescoping to x^3 - 1
  CHECK(pz("x^3+2x^2+x+3") * pz("x^3+3x^2+2x+3") * pz("x+3") == pz("x^7+3"));
  CHECK_FALSE(pr("x") == pr("x+1"));

  // x * x^{n-1} = 1 in the residue ring
  CyclicPolyR x1(5, pr("x"));
  CyclicPolyR xn1(5, pr("x^4"));
  CHECK(x1 * xn1 == CyclicPolyR::one(5));
}

TEST_CASE("degree bookkeeping and the zero marker") {
  CHECK(PolyR::zero().degree() == -1);
  CHECK(PolyR::zero().is_zero());
  CHECK((pr("x^2+1") - pr("x^2")).degree() == 0);
  CHECK((pr("2x^3") + pr("2x^3")).is_zero());  // 4 = 0
  CHECK(pr("3x^2+1").lead() == RingElement{Z4{3}, Z4{0}});
}

TEST_CASE("projections are ring homomorphisms") {
  CHECK(poly_mod_u(pr("u+2x+ux^2")) == pz("2x"));
  CHECK(poly_mod_u(pr("x^3+2x^2+x+3")) == pz("x^3+2x^2+x+3"));
  CHECK(poly_mod_u(pr("ux^4+3u")).is_zero());

  CHECK(poly_mod_maximal(pr("x^3+2x^2+x+3")) == parse_poly_f2("x^3+x+1"));
  CHECK(poly_mod_maximal(pr("2+ux")).is_zero());
  CHECK(poly_mod_maximal(pr("x^4+3x^3+2x^2+1")) == parse_poly_f2("x^4+x^3+1"));

  std::mt19937_64 rng(12345);
  for (int it = 0; it < 500; ++it) {
    PolyR f = random_poly_r(rng, 6), g = random_poly_r(rng, 6);
    CHECK(poly_mod_u(f * g) == poly_mod_u(f) * poly_mod_u(g));
    CHECK(poly_mod_u(f + g) == poly_mod_u(f) + poly_mod_u(g));
    CHECK(poly_mod_maximal(f * g) == poly_mod_maximal(f) * poly_mod_maximal(g));
    CHECK(poly_mod_maximal(f + g) == poly_mod_maximal(f) + poly_mod_maximal(g));
  }
}

TEST_CASE("regularity") {
  CHECK_FALSE(is_regular(pr("2+ux")));
  CHECK(is_regular(pr("x^3+2x^2+x+3")));
  CHECK_FALSE(is_regular(pr("u")));
  CHECK_FALSE(is_regular(PolyR::zero()));
}

TEST_CASE("monic associate") {
  auto ma = monic_associate(pr("(1+u)x+1"));
  CHECK(ma.unit == pr("1+u"));
  CHECK(ma.monic == pr("x+(1+3u)"));

  auto mono = monic_associate(pr("x^5+ux^2+3"));
  CHECK(mono.unit == PolyR::one());
  CHECK(mono.monic == pr("x^5+ux^2+3"));

  auto three = monic_associate(pr("3x+1"));
  CHECK(three.unit == pr("3"));
  CHECK(three.monic == pr("x+3"));

  CHECK_THROWS_AS(monic_associate(pr("2x+u")), std::domain_error);

  // v * fstar = f exactly, fstar monic with the top unit coefficient's degree
  std::mt19937_64 rng(777);
  for (int it = 0; it < 2000; ++it) {
    PolyR f = random_poly_r(rng, 7);
    if (!is_regular(f)) continue;
    auto m = monic_associate(f);
    CHECK(m.unit * m.monic == f);
    CHECK(m.monic.is_monic());
    int top_unit = -1;
    for (int i = 0; i <= f.degree(); ++i)
      if (f.at(i).is_unit()) top_unit = i;
    CHECK(m.monic.degree() == top_unit);
    // multiplying by the unit part preserves regularity
    CHECK(is_regular(m.unit * pr("x+1")));
  }
}

TEST_CASE("division by regular polynomials") {
  auto [q, r] = poly_divmod(pr("x^5"), pr("x^2+1"));
  CHECK(q == pr("x^3+3x"));
  CHECK(r == pr("x"));

  auto [q2, r2] = poly_divmod(pr("x^3+2x^2+x+3"), pr("x^3+2x^2+x+3"));
  CHECK(q2 == PolyR::one());
  CHECK(r2.is_zero());

  auto [q3, r3] = poly_divmod(PolyR::xn_minus_1(7), pr("x^3+2x^2+x+3"));
  CHECK(r3.is_zero());

  CHECK_THROWS_AS(poly_divmod(pr("x"), pr("2x+2u")), std::domain_error);

  std::mt19937_64 rng(31337);
  int done = 0;
  while (done < 10000) {
    PolyR f = random_poly_r(rng, 9), g = random_poly_r(rng, 5);
    if (!is_regular(g)) continue;
    ++done;
    auto [qq, rr] = poly_divmod(f, g);
    CHECK(g * qq + rr == f);
    CHECK(rr.degree() < g.degree());
  }
}

TEST_CASE("bezout lifting") {
  auto bz = bezout_lift(pz("x+3"), pz("x^2+x+1"));
  REQUIRE(bz.has_value());
  CHECK(bz->first == pz("2x^3+x"));
  CHECK(bz->second == pz("2x^2+1"));
  CHECK(bz->first * pz("x+3") + bz->second * pz("x^2+x+1") == PolyZ4::one());

  auto triv = bezout_lift(pr("1"), pr("x^5+ux^2+2"));
  REQUIRE(triv.has_value());
  CHECK(triv->first == PolyR::one());
  CHECK(triv->second.is_zero());

  CHECK_FALSE(bezout_lift(pr("x+1"), pr("x^2+1")).has_value());  // (x+1)^2 mod 2

  std::mt19937_64 rng(4242);
  int done = 0;
  while (done < 2000) {
    PolyR f = random_poly_r(rng, 6), g = random_poly_r(rng, 6);
    auto res = bezout_lift(f, g);
    if (!res) continue;
    ++done;
    CHECK(res->first * f + res->second * g == PolyR::one());
  }
}

TEST_CASE("bezout refusal is honest at tiny degrees") {
  // x+1 and x^2+1 share a factor mod <2,u>; sweep all A of degree <= 1 and
  // constant B over R and confirm no pair reaches 1
  PolyR f = pr("x+1"), g = pr("x^2+1");
  REQUIRE_FALSE(bezout_lift(f, g).has_value());
  bool found = false;
  for (int a0 = 0; a0 < 16; ++a0)
    for (int a1 = 0; a1 < 16; ++a1)
      for (int b0 = 0; b0 < 16; ++b0) {
        PolyR A{std::vector<RingElement>{RingElement::unpack(static_cast<uint8_t>(a0)),
                                         RingElement::unpack(static_cast<uint8_t>(a1))}};
        PolyR B = PolyR::constant(RingElement::unpack(static_cast<uint8_t>(b0)));
        if (A * f + B * g == PolyR::one()) found = true;
      }
  CHECK_FALSE(found);
}

TEST_CASE("reciprocals") {
  CHECK(reciprocal(pz("x^3+2x^2+x+3")) == pz("3x^3+x^2+2x+1"));
  CHECK(reciprocal(PolyR::one()) == PolyR::one());
  CyclicPolyZ4 res(3, pz("x^2+x+2"));
  CHECK(res.reciprocal() == res);  // substitute x -> x^2 and reduce mod x^3-1
  CyclicPolyR res2(5, pr("x+3u"));
  CyclicPolyR expect(5);
  expect.c[4] = RingElement{Z4{1}, Z4{0}};
  expect.c[0] = RingElement{Z4{0}, Z4{3}};
  CHECK(res2.reciprocal() == expect);
}

TEST_CASE("polynomial text round-trip") {
  for (const char* s : {"x^3+2x^2+x+3", "(1+u)x+1", "3ux^2", "u+2x+ux^2", "0", "1", "x",
                        "(2+3u)x^4+2+3u", "2x^2+u"}) {
    PolyR f = pr(s);
    CHECK(pr(to_string(f)) == f);
  }
  CHECK(to_string(pr("x-1")) == "x+3");
  CHECK(to_string(pz("x^3+2x^2+x+3"), /*paper_style=*/true) == "x^3+2x^2+x-1");
  CHECK(to_string(pr("3ux^2")) == "3ux^2");
  CHECK_THROWS_AS(pr("x^"), ParseError);
  CHECK_THROWS_AS(pr("(1+u"), ParseError);
  CHECK_THROWS_AS(parse_poly_z4("ux+1"), ParseError);
}

TEST_CASE("coefficient-list JSON round-trip") {
  PolyR f = pr("x^3+2x^2+x+3");
  nlohmann::json j = to_json(f);
  CHECK(j.dump() == R"({"coeffs":[[3,0],[1,0],[2,0],[1,0]],"ring":"R"})");
  CHECK(poly_r_from_json(j) == f);
  PolyZ4 z = pz("2x+1");
  CHECK(poly_z4_from_json(to_json(z)) == z);
  PolyF2 b = parse_poly_f2("x^4+x^3+1");
  CHECK(poly_f2_from_json(to_json(b)) == b);
}
