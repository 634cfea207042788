#include <catch_amalgamated.hpp>

#include "ru4/factor.hpp"

using namespace ru4;

namespace {

// Test-only oracle: one quadratic-Newton Hensel step from a factorization of
// x^n - 1 over F2 to one over Z4.  Independent of the Graeffe route.
PolyZ4 newton_hensel_lift(const PolyF2& g, int n) {
  PolyF2 xn1_f2 = PolyF2::xn_minus_1(n);
  auto [hbar, rem] = xn1_f2.divmod_monic(g);
  REQUIRE(rem.is_zero());
  PolyF2 gcd, abar, bbar;
  f2_ext_gcd(g, hbar, gcd, abar, bbar);
  REQUIRE(gcd == PolyF2::one());  // a g + b h = 1 over F2
  PolyZ4 f0 = lift_to_z4(g), h0 = lift_to_z4(hbar);
  PolyZ4 diff = PolyZ4::xn_minus_1(n) - f0 * h0;  // divisible by 2
  PolyF2 ebar;
  for (auto c : diff.c) {
    REQUIRE(c.v % 2 == 0);
    ebar.c.push_back(F2{c.v >> 1});
  }
  ebar.normalize();
  PolyF2 corr = (bbar * ebar).divmod_monic(g).second;  // b*E mod g over F2
  return f0 + lift_to_z4(corr).scaled(Z4{2});
}

}  // namespace

TEST_CASE("cyclotomic cosets") {
  auto c7 = cyclotomic_cosets(7);
  REQUIRE(c7.size() == 3);
  CHECK(c7[0].members == std::vector<int>{0});
  CHECK(c7[1].members == std::vector<int>{1, 2, 4});
  CHECK(c7[2].members == std::vector<int>{3, 5, 6});

  auto c15 = cyclotomic_cosets(15);
  REQUIRE(c15.size() == 5);
  CHECK(c15[0].members == std::vector<int>{0});
  CHECK(c15[1].members == std::vector<int>{1, 2, 4, 8});
  CHECK(c15[2].members == std::vector<int>{3, 6, 9, 12});
  CHECK(c15[3].members == std::vector<int>{5, 10});
  CHECK(c15[4].members == std::vector<int>{7, 11, 13, 14});

  auto c1 = cyclotomic_cosets(1);
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].members == std::vector<int>{0});

  CHECK_THROWS_WITH(cyclotomic_cosets(4), Catch::Matchers::ContainsSubstring("odd"));
}

TEST_CASE("factorization of x^n-1 over F2") {
  auto f7 = factor_xn1_f2(7);
  REQUIRE(f7.factors.size() == 3);
  CHECK(f7.factors[0] == parse_poly_f2("x+1"));
  CHECK(f7.factors[1] == parse_poly_f2("x^3+x+1"));
  CHECK(f7.factors[2] == parse_poly_f2("x^3+x^2+1"));

  auto f3 = factor_xn1_f2(3);
  REQUIRE(f3.factors.size() == 2);
  CHECK(f3.factors[0] == parse_poly_f2("x+1"));
  CHECK(f3.factors[1] == parse_poly_f2("x^2+x+1"));

  auto f15 = factor_xn1_f2(15);
  std::vector<int> degs;
  for (const auto& f : f15.factors) degs.push_back(f.degree());
  CHECK(degs == std::vector<int>{1, 4, 4, 2, 4});
}

TEST_CASE("hensel lifts by graeffe root squaring") {
  CHECK(hensel_lift_z4(parse_poly_f2("x^3+x+1")) == parse_poly_z4("x^3+2x^2+x+3"));
  CHECK(hensel_lift_z4(parse_poly_f2("x+1")) == parse_poly_z4("x+3"));
  CHECK(hensel_lift_z4(parse_poly_f2("x^4+x^3+1")) == parse_poly_z4("x^4+3x^3+2x^2+1"));
  CHECK(hensel_lift_r(parse_poly_f2("x^3+x^2+1")) == parse_poly_r("x^3+3x^2+2x+3"));
  CHECK_THROWS_AS(hensel_lift_z4(parse_poly_f2("x^2+1")), std::domain_error);  // reducible
  CHECK_THROWS_AS(hensel_lift_z4(parse_poly_f2("x^2+x")), std::domain_error);  // x | input
}

TEST_CASE("factorization over Z4 and R") {
  auto z7 = factor_xn1_z4(7);
  REQUIRE(z7.factors.size() == 3);
  CHECK(z7.factors[0] == parse_poly_z4("x+3"));
  CHECK(z7.factors[1] == parse_poly_z4("x^3+2x^2+x+3"));
  CHECK(z7.factors[2] == parse_poly_z4("x^3+3x^2+2x+3"));

  auto r15 = factor_xn1_r(15);
  REQUIRE(r15.factors.size() == 5);
  CHECK(r15.factors[0] == parse_poly_r("x+3"));
  // which coset carries which factor depends on the choice of primitive
  // root, so membership is what is pinned down
  auto contains = [&](const char* s) {
    PolyR want = parse_poly_r(s);
    for (const auto& f : r15.factors)
      if (f == want) return true;
    return false;
  };
  CHECK(contains("x^4+3x^3+2x^2+1"));
  CHECK(contains("x^4+x^3+x^2+x+1"));
  CHECK(contains("x^2+x+1"));
  CHECK(contains("x^4+2x^2+3x+1"));

  auto r1 = factor_xn1_r(1);
  REQUIRE(r1.factors.size() == 1);
  CHECK(r1.factors[0] == parse_poly_r("x+3"));
}

TEST_CASE("lifted factors recombine exactly for all odd n <= 31") {
  for (int n = 1; n <= 31; n += 2) {
    auto fz = factor_xn1_z4(n, /*max_ord=*/30);
    PolyZ4 prod = PolyZ4::one();
    for (const auto& f : fz.factors) {
      prod = prod * f;
      CHECK(poly_mod_maximal(f).degree() == f.degree());
      CHECK(is_basic_irreducible(f));
    }
    CHECK(prod == PolyZ4::xn_minus_1(n));
    // each lift reduces to its F2 source
    auto fb = factor_xn1_f2(n, 30);
    for (size_t i = 0; i < fz.factors.size(); ++i)
      CHECK(poly_mod_maximal(fz.factors[i]) == fb.factors[i]);
    // pairwise coprime
    for (size_t i = 0; i < fz.factors.size(); ++i)
      for (size_t j = i + 1; j < fz.factors.size(); ++j)
        CHECK(bezout_lift(fz.factors[i], fz.factors[j]).has_value());
  }
}

TEST_CASE("the configured order bound is enforced") {
  CHECK_THROWS_WITH(factor_xn1_f2(29), Catch::Matchers::ContainsSubstring("exceeds"));
  CHECK_NOTHROW(factor_xn1_f2(29, 28));  // ord_29(2) = 28, opt-in
}

TEST_CASE("uniqueness: an independent newton-hensel iteration gives the same lifts") {
  for (int n : {7, 15}) {
    auto base = factor_xn1_f2(n);
    for (const auto& g : base.factors) {
      PolyZ4 newton = newton_hensel_lift(g, n);
      // the Newton step must land on a divisor of x^n-1 congruent to g ...
      CHECK(poly_mod_maximal(newton) == g);
      CHECK(PolyZ4::xn_minus_1(n).divmod_monic(newton).second.is_zero());
      // ... and agree with the Graeffe lift (Hensel lifts are unique)
      CHECK(newton == graeffe_lift(g));
    }
  }
}

TEST_CASE("basic irreducibility and primitivity") {
  CHECK(is_basic_primitive(parse_poly_z4("x^4+3x^3+2x^2+1")));
  CHECK(is_basic_irreducible(parse_poly_z4("x^4+x^3+x^2+x+1")));
  CHECK_FALSE(is_basic_primitive(parse_poly_z4("x^4+x^3+x^2+x+1")));  // root order 5
  CHECK_FALSE(is_basic_irreducible(parse_poly_r("2x+1+u")));          // image is 1
  CHECK_FALSE(is_basic_irreducible(parse_poly_r("ux^3+2")));          // image is 0
}

TEST_CASE("crt idempotents") {
  auto fz3 = factor_xn1_z4(3);
  auto idem = crt_idempotents(fz3);
  REQUIRE(idem.idempotents.size() == 2);
  CHECK(idem.idempotents[0] == CyclicPolyZ4(3, parse_poly_z4("3x^2+3x+3")));
  CHECK(idem.idempotents[1] == CyclicPolyZ4(3, parse_poly_z4("x^2+x+2")));

  auto f1 = factor_xn1_r(1);
  auto idem1 = crt_idempotents(f1);
  REQUIRE(idem1.idempotents.size() == 1);
  CHECK(idem1.idempotents[0] == CyclicPolyR::one(1));

  // idempotent laws hold exactly for all odd n <= 31 over both rings
  // (crt_idempotents verifies e_i^2 = e_i, e_i e_j = 0, sum = 1 internally)
  for (int n = 1; n <= 31; n += 2) {
    CHECK_NOTHROW(crt_idempotents(factor_xn1_z4(n, 30)));
    CHECK_NOTHROW(crt_idempotents(factor_xn1_r(n, 30)));
  }
}
