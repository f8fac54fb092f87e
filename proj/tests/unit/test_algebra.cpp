#include <doctest.h>

#include <random>

#include "capdist/tripoly.hpp"
#include "capdist/xseries.hpp"

using namespace capdist;

namespace {

TriPoly random_poly(std::mt19937& rng, int max_terms = 5) {
  std::uniform_int_distribution<int> terms(0, max_terms), expo(0, 3), coef(-9, 9);
  TriPoly out;
  for (int i = terms(rng); i > 0; --i) {
    const Exponents e{static_cast<std::uint32_t>(expo(rng)), static_cast<std::uint32_t>(expo(rng)),
                      static_cast<std::uint32_t>(expo(rng))};
    out.add_term(e, BigInt(coef(rng)));
  }
  return out;
}

}  // namespace

TEST_CASE("text rendering") {
  const TriPoly y = TriPoly::y();
  CHECK(to_text(TriPoly()) == "0");
  CHECK(to_text(10 + 2 * y + y * y) == "10 + 2y + y^2");
  CHECK(to_text(-y) == "-y");
  CHECK(to_text(TriPoly::monomial(2, {1, 2, 5})) == "2yp^2q^5");
  CHECK(to_text(TriPoly::q() - 3) == "-3 + q");
}

TEST_CASE("zero coefficients are never stored") {
  TriPoly a = TriPoly::y() + 1;
  a -= TriPoly::y();
  CHECK(a.term_count() == 1);
  CHECK(a.is_constant());
  a -= 1;
  CHECK(a.is_zero());
  CHECK(a == TriPoly());
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(20260101);
  for (int trial = 0; trial < 300; ++trial) {
    const TriPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + (-a) == TriPoly());
    REQUIRE(a * 1 == a);
    REQUIRE((a * TriPoly()).is_zero());
    REQUIRE(poly_add(a, b) == a + b);
    REQUIRE(poly_mul(a, b) == a * b);
    REQUIRE(poly_neg(a) == -a);
    // Evaluation is a ring homomorphism.
    REQUIRE(poly_eval_int(a * b + c, 2, -1, 3) ==
            poly_eval_int(a, 2, -1, 3) * poly_eval_int(b, 2, -1, 3) + poly_eval_int(c, 2, -1, 3));
    // Product rule.
    REQUIRE(poly_dy(a * b) == poly_dy(a) * b + a * poly_dy(b));
  }
}

TEST_CASE("specialization") {
  const TriPoly y = TriPoly::y(), p = TriPoly::p(), q = TriPoly::q();
  const TriPoly a = y * p * p + 3 * q - y;
  CHECK(specialize(a, 1, std::nullopt, std::nullopt) == p * p + 3 * q - 1);
  CHECK(specialize(a, std::nullopt, 2, std::nullopt) == 3 * y + 3 * q);
  CHECK(specialize(a, -1, 1, 1) == TriPoly(3));
  CHECK(poly_eval_int(a, -1, 1, 1) == 3);
  CHECK(a.degree_y() == 1);
  CHECK(a.degree_p() == 2);
  CHECK(a.degree_q() == 1);
}

TEST_CASE("json shape") {
  const auto j = to_json(TriPoly::monomial(BigInt("123456789012345678901234567890"), {1, 0, 2}));
  REQUIRE(j["terms"].size() == 1);
  CHECK(j["terms"][0]["y"] == 1);
  CHECK(j["terms"][0]["q"] == 2);
  CHECK(j["terms"][0]["coef"] == "123456789012345678901234567890");
}

TEST_CASE("series inversion of random unit series") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t order = std::uniform_int_distribution<std::size_t>(0, 64)(rng);
    XSeries a(order);
    a[0] = trial % 2 ? TriPoly(1) : TriPoly(-1);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (std::size_t i = 1; i <= std::min<std::size_t>(order, 6); ++i) {
      a[i] = coef(rng) + coef(rng) * TriPoly::y() + coef(rng) * TriPoly::p();
    }
    const XSeries product = a * series_invert(a);
    REQUIRE(product == XSeries::one(order));
  }
}

TEST_CASE("rational series") {
  // 1/(1-x-x^2) lists Fibonacci numbers.
  const XSeries fibs = series_invert(XSeries(10, {1, -1, -1}));
  const long expected[] = {1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
  for (std::size_t n = 0; n <= 10; ++n) CHECK(fibs[n] == TriPoly(expected[n]));

  CHECK_THROWS_AS(series_invert(XSeries(4, {2, 1})), NonUnitConstantError);
  CHECK_THROWS_AS(series_invert(XSeries(4, {TriPoly::y(), 1})), NonUnitConstantError);

  const XSeries shifted = substitute_qx(XSeries(3, {1, 1, TriPoly::y(), 1}));
  CHECK(shifted[2] == TriPoly::y() * TriPoly::q(2));
  CHECK(shifted[3] == TriPoly::q(3));

  const XSeries truncated = XSeries(8, {1, 2, 3}).truncated(1);
  CHECK(truncated.order() == 1);
  CHECK(truncated[1] == TriPoly(2));
}
