#include <catch_amalgamated.hpp>

#include <random>

#include "ru4/galois.hpp"

using namespace ru4;

namespace {

GrElem element_from_index(const GaloisRing& gr, uint64_t idx) {
  GrElem e = gr.zero();
  for (int i = 0; i < gr.degree(); ++i)
    e.c[static_cast<size_t>(i)] = RingElement::unpack(static_cast<uint8_t>((idx >> (4 * i)) & 0xF));
  return e;
}

uint64_t element_count(const GaloisRing& gr) { return uint64_t{1} << (4 * gr.degree()); }

const char* kPowerTable[] = {
    // xi^4 .. xi^15 for the modulus x^4+3x^3+2x^2+1, each row recomputed and
    // cross-checked against plain Z4[x] exponentiation below
    "xi^3+2xi^2+3",        "3xi^3+2xi^2+3xi+3", "xi^3+xi^2+3xi+1", "2xi^3+xi^2+xi+3",
    "3xi^3+xi^2+3xi+2",    "xi^2+2xi+1",        "xi^3+2xi^2+xi",   "3xi^3+3xi^2+3",
    "2xi^3+2xi^2+3xi+1",   "3xi^2+xi+2",        "3xi^3+xi^2+2xi",  "1"};

// Independent oracle: raise x to the k-th power in Z4[x] reduced by the
// modulus, using only polynomial division.
PolyZ4 plain_xpow(const PolyZ4& modulus, uint64_t k) {
  PolyZ4 acc = PolyZ4::one();
  for (uint64_t i = 0; i < k; ++i)
    acc = (acc * parse_poly_z4("x")).divmod_monic(modulus).second;
  return acc;
}

}  // namespace

TEST_CASE("construction and the xi power table") {
  GaloisRing gr(4, parse_poly_r("x^4+3x^3+2x^2+1"));
  CHECK(gr.group_order() == 15);
  CHECK(gr.size_log2() == 16);  // |GR(R,4)| = 16^4
  CHECK(gr.pow(gr.xi(), 15) == gr.one());

  PolyZ4 mod_z4 = parse_poly_z4("x^4+3x^3+2x^2+1");
  for (uint64_t k = 4; k <= 15; ++k) {
    GrElem p = gr.pow(gr.xi(), k);
    CHECK(gr.to_string(p) == kPowerTable[k - 4]);
    // cross-check through the independent Z4[x] route
    PolyZ4 q = plain_xpow(mod_z4, k);
    for (int i = 0; i < 4; ++i) {
      CHECK(p.c[static_cast<size_t>(i)].a == q.at(i));
      CHECK(p.c[static_cast<size_t>(i)].b.is_zero());
    }
  }
}

TEST_CASE("specific powers of xi") {
  GaloisRing gr(4, parse_poly_r("x^4+3x^3+2x^2+1"));
  CHECK(gr.to_string(gr.pow(gr.xi(), 4)) == "xi^3+2xi^2+3");
  CHECK(gr.to_string(gr.pow(gr.xi(), 9)) == "xi^2+2xi+1");
  CHECK(gr.pow(gr.xi(), 15) == gr.one());
}

TEST_CASE("degenerate and small degrees") {
  GaloisRing r1(1);  // GR(R,1) = R
  CHECK(r1.group_order() == 1);
  CHECK(r1.xi() == r1.one());
  for (auto x : all_elements_of_r()) {
    GrElem e = r1.from_r(x);
    CHECK(r1.is_unit(e) == x.is_unit());
  }

  GaloisRing r2(2, parse_poly_r("x^2+x+1"));
  CHECK(r2.pow(r2.xi(), 3) == r2.one());
  CHECK_FALSE(r2.pow(r2.xi(), 1) == r2.one());
}

TEST_CASE("non-primitive moduli are rejected") {
  CHECK_THROWS_WITH(GaloisRing(4, parse_poly_r("x^4+x^3+x^2+x+1")),
                    Catch::Matchers::ContainsSubstring("not basic primitive"));
  CHECK_THROWS_AS(GaloisRing(2, parse_poly_r("x^2+1")), std::domain_error);
}

TEST_CASE("teichmuller coordinates") {
  GaloisRing gr(4, parse_poly_r("x^4+3x^3+2x^2+1"));

  GrElem x1 = gr.add(gr.from_r(RingElement{2, 0}), gr.scale(RingElement{0, 1}, gr.xi()));
  TeichCoords t1 = gr.teichmuller_decompose(x1);  // 2 + u*xi = 0 + 2*1 + u*xi + 2u*0
  CHECK(t1 == TeichCoords{-1, 0, 1, -1});

  TeichCoords t2 = gr.teichmuller_decompose(gr.xi());
  CHECK(t2 == TeichCoords{1, -1, -1, -1});

  TeichCoords t3 = gr.teichmuller_decompose(gr.from_r(RingElement{3, 0}));  // 3 = 1 + 2*1
  CHECK(t3 == TeichCoords{0, 0, -1, -1});

  // recomposition is exact on a random sample at r = 4
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<uint64_t> dist(0, element_count(gr) - 1);
  for (int it = 0; it < 5000; ++it) {
    GrElem e = element_from_index(gr, dist(rng));
    CHECK(gr.recompose(gr.teichmuller_decompose(e)) == e);
  }
}

TEST_CASE("decompose-recompose is exact, exhaustively for r <= 3") {
  for (int r = 1; r <= 3; ++r) {
    GaloisRing gr(r);
    for (uint64_t idx = 0; idx < element_count(gr); ++idx) {
      GrElem e = element_from_index(gr, idx);
      CHECK(gr.recompose(gr.teichmuller_decompose(e)) == e);
    }
  }
}

TEST_CASE("unit census: 8^r (2^r - 1)") {
  for (int r = 1; r <= 3; ++r) {
    GaloisRing gr(r);
    uint64_t units = 0;
    for (uint64_t idx = 0; idx < element_count(gr); ++idx)
      if (gr.is_unit(element_from_index(gr, idx))) ++units;
    uint64_t expected = 1;
    for (int i = 0; i < r; ++i) expected *= 8;
    expected *= (uint64_t{1} << r) - 1;
    CHECK(units == expected);
  }
  // r = 4 by Teichmuller counting: unit <=> a0 != 0
  GaloisRing gr4(4, parse_poly_r("x^4+3x^3+2x^2+1"));
  uint64_t units = 0;
  for (uint64_t idx = 0; idx < element_count(gr4); ++idx) {
    GrElem e = element_from_index(gr4, idx);
    TeichCoords t = gr4.teichmuller_decompose(e);
    bool unit = t.a0 >= 0;
    CHECK(unit == gr4.is_unit(e));
    if (unit) ++units;
  }
  CHECK(units == 8ull * 8 * 8 * 8 * 15);
}

TEST_CASE("inverses") {
  GaloisRing gr(4, parse_poly_r("x^4+3x^3+2x^2+1"));
  CHECK(gr.inverse(gr.xi()) == gr.teich(14));
  GrElem e = gr.add(gr.one(), gr.scale(RingElement{2, 0}, gr.xi()));  // 1 + 2xi
  CHECK(gr.is_unit(e));
  CHECK(gr.mul(gr.inverse(e), e) == gr.one());
  GrElem nonunit = gr.add(gr.from_r(RingElement{2, 0}), gr.scale(RingElement{0, 1}, gr.xi()));
  CHECK_FALSE(gr.is_unit(nonunit));
  CHECK_THROWS_AS(gr.inverse(nonunit), std::domain_error);

  std::mt19937_64 rng(555);
  std::uniform_int_distribution<uint64_t> dist(0, element_count(gr) - 1);
  for (int it = 0; it < 2000; ++it) {
    GrElem x = element_from_index(gr, dist(rng));
    if (!gr.is_unit(x)) continue;
    CHECK(gr.mul(gr.inverse(x), x) == gr.one());
  }
}

TEST_CASE("frobenius") {
  GaloisRing gr(4, parse_poly_r("x^4+3x^3+2x^2+1"));
  CHECK(gr.frobenius(gr.xi()) == gr.pow(gr.xi(), 2));
  for (auto v : all_elements_of_r()) CHECK(gr.frobenius(gr.from_r(v)) == gr.from_r(v));
  CHECK(gr.frobenius(gr.from_r(RingElement{3, 2})) == gr.from_r(RingElement{3, 2}));

  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<uint64_t> dist(0, element_count(gr) - 1);
  for (int it = 0; it < 2000; ++it) {
    GrElem x = element_from_index(gr, dist(rng));
    GrElem y = element_from_index(gr, dist(rng));
    CHECK(gr.frobenius(gr.mul(x, y)) == gr.mul(gr.frobenius(x), gr.frobenius(y)));
    CHECK(gr.frobenius(gr.add(x, y)) == gr.add(gr.frobenius(x), gr.frobenius(y)));
  }
}

TEST_CASE("sigma^r is the identity, exhaustively for r <= 3") {
  for (int r = 1; r <= 3; ++r) {
    GaloisRing gr(r);
    for (uint64_t idx = 0; idx < element_count(gr); ++idx) {
      GrElem e = element_from_index(gr, idx);
      GrElem s = e;
      for (int k = 0; k < r; ++k) s = gr.frobenius(s);
      CHECK(s == e);
    }
  }
}

TEST_CASE("n-th roots of unity") {
  GaloisRing gr(4, parse_poly_r("x^4+3x^3+2x^2+1"));
  auto roots15 = gr.nth_roots(15);
  REQUIRE(roots15.size() == 15);
  for (int k = 0; k < 15; ++k) CHECK(roots15[static_cast<size_t>(k)] == gr.teich(k));

  auto roots5 = gr.nth_roots(5);
  REQUIRE(roots5.size() == 5);
  for (int k = 0; k < 5; ++k) CHECK(roots5[static_cast<size_t>(k)] == gr.teich(3 * k));
  for (const auto& z : roots5) CHECK(gr.pow(z, 5) == gr.one());

  auto roots3 = gr.nth_roots(3);
  REQUIRE(roots3.size() == 3);
  for (int k = 0; k < 3; ++k) CHECK(roots3[static_cast<size_t>(k)] == gr.teich(5 * k));

  CHECK_THROWS_AS(gr.nth_roots(7), std::domain_error);
}

TEST_CASE("minimal polynomials over R") {
  GaloisRing gr(4, parse_poly_r("x^4+3x^3+2x^2+1"));
  CHECK(gr.minimal_polynomial(0, 15) == parse_poly_r("x+3"));
  CHECK(gr.minimal_polynomial(1, 15) == parse_poly_r("x^4+3x^3+2x^2+1"));
  CHECK(gr.minimal_polynomial(2, 15) == gr.minimal_polynomial(1, 15));
  CHECK(gr.minimal_polynomial(4, 15) == gr.minimal_polynomial(1, 15));
  CHECK(gr.minimal_polynomial(3, 15) == parse_poly_r("x^4+x^3+x^2+x+1"));
  CHECK(gr.minimal_polynomial(6, 15) == gr.minimal_polynomial(3, 15));
  CHECK(gr.minimal_polynomial(5, 15) == parse_poly_r("x^2+x+1"));

  // over the coset leaders: pairwise coprime, and the product is x^n - 1
  PolyR prod = PolyR::one();
  std::vector<PolyR> mins;
  for (int i : {0, 1, 3, 5, 7}) mins.push_back(gr.minimal_polynomial(i, 15));
  for (size_t i = 0; i < mins.size(); ++i)
    for (size_t j = i + 1; j < mins.size(); ++j)
      CHECK(bezout_lift(mins[i], mins[j]).has_value());
  for (const auto& m : mins) prod = prod * m;
  CHECK(prod == PolyR::xn_minus_1(15));
}
