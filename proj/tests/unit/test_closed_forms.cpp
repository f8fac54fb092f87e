#include <doctest.h>

#include "capdist/closed_forms.hpp"
#include "oracles.hpp"

using namespace capdist;

namespace {

// Brute-force totals over B_n from the oracle enumeration.
struct Totals {
  BigInt capacity_sum = 0;
  BigInt signed_count = 0;
};

Totals brute_totals(int n) {
  Totals t;
  for (const auto& c : oracle::compositions_12(n)) {
    const auto cap = oracle::flood_capacity(c);
    t.capacity_sum += static_cast<unsigned long>(cap);
    t.signed_count += cap % 2 == 0 ? 1 : -1;
  }
  return t;
}

}  // namespace

TEST_CASE("fibonacci numbers") {
  CHECK(fib(0) == 1);
  CHECK(fib(1) == 1);
  CHECK(fib(6) == 13);
  CHECK(fib(-1) == 0);
  CHECK(fib(-2) == 1);
  CHECK(fib(-3) == -1);
  CHECK(fib(-4) == 2);
  for (int n = kMinFibIndex + 2; n <= 200; ++n) REQUIRE(fib(n) == fib(n - 1) + fib(n - 2));
  CHECK_THROWS_AS(fib(kMinFibIndex - 1), std::out_of_range);
  for (int n : {0, 5, 100, 1000, 4095, 4096, 4097, 10000}) CHECK(fib(n) == oracle::fib(n));
}

TEST_CASE("lucas numbers") {
  CHECK(lucas(1) == 1);
  CHECK(lucas(2) == 3);
  CHECK(lucas(3) == 4);
  CHECK(lucas(10) == 123);
  CHECK_THROWS_AS(lucas(0), std::out_of_range);
}

TEST_CASE("fibonacci polynomials") {
  const TriPoly p = TriPoly::p();
  CHECK(fib_poly(0) == TriPoly(1));
  CHECK(fib_poly(1) == p);
  CHECK(fib_poly(3) == p * p * p + 2 * p);
  for (int n = 1; n <= 30; ++n) {
    for (long v : {1L, 2L, 5L}) REQUIRE(poly_eval_int(fib_poly(n), 1, v, 1) == fib_poly_at(n, v));
    REQUIRE(poly_eval_int(fib_poly(n), 1, 1, 1) == fib(n));
  }
}

TEST_CASE("binomials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 5) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("capacity counts") {
  CHECK(w0(0) == 1);
  CHECK(w0(6) == 10);
  CHECK(wnk(5, 1) == 1);
  CHECK(wnk(9, 3) == 7);
  CHECK(wnk(9, 6) == 0);
  CHECK_THROWS_AS(wnk(9, 0), std::invalid_argument);
  for (int n = 0; n <= 18; ++n) {
    const auto hist = oracle::capacity_histogram(n);
    for (int k = 0; k <= n; ++k) {
      const auto it = hist.find(static_cast<std::uint64_t>(k));
      const BigInt expected = it == hist.end() ? 0UL : static_cast<unsigned long>(it->second);
      CAPTURE(n);
      CAPTURE(k);
      REQUIRE((k == 0 ? w0(n) : wnk(n, k)) == expected);
    }
  }
}

TEST_CASE("total capacity and sign balance") {
  for (int n = 0; n <= 4; ++n) CHECK(total_capacity(n) == 0);
  CHECK(total_capacity(5) == 1);
  CHECK(total_capacity(6) == 4);
  const long first_balances[] = {1, 1, 2, 3, 5, 6, 9};
  for (int n = 0; n <= 6; ++n) CHECK(sign_balance(n) == first_balances[n]);
  for (int n = 0; n <= 18; ++n) {
    const Totals t = brute_totals(n);
    CAPTURE(n);
    REQUIRE(total_capacity(n) == t.capacity_sum);
    REQUIRE(sign_balance(n) == t.signed_count);
  }
}

TEST_CASE("refined counts by number of ones") {
  CHECK(bnkj(9, 3, 3) == 4);
  CHECK(bnkj(6, 0, 6) == 1);
  CHECK(bnkj(6, 0, 2) == 3);
  CHECK(bnkj(9, 4, 3) == 0);
  CHECK_THROWS_AS(bnkj(9, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(bnkj(9, 3, 11), std::invalid_argument);
  CHECK_THROWS_AS(bnkj(-1, 0, 0), std::invalid_argument);
  for (int n = 0; n <= 16; ++n) {
    std::map<std::pair<std::uint64_t, std::uint64_t>, unsigned long> brute;
    for (const auto& c : oracle::compositions_12(n)) ++brute[{oracle::flood_capacity(c), oracle::count_of(c, 1)}];
    for (int j = n % 2; j <= n; j += 2) {
      for (int k = 0; k <= n; ++k) {
        const auto it = brute.find({k, j});
        REQUIRE(bnkj(n, k, j) == (it == brute.end() ? 0UL : it->second));
      }
    }
  }
}

TEST_CASE("colored total capacity") {
  CHECK(total_capacity_colored(6, 2) == 16);
  CHECK_THROWS_AS(total_capacity_colored(6, 0), std::invalid_argument);
  for (int n = 0; n <= 14; ++n) {
    for (long p = 1; p <= 4; ++p) {
      BigInt brute = 0;
      for (const auto& c : oracle::compositions_12(n)) {
        BigInt w;
        mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(p), oracle::count_of(c, 1));
        brute += w * static_cast<unsigned long>(oracle::flood_capacity(c));
      }
      REQUIRE(total_capacity_colored(n, p) == brute);
    }
  }
  for (int n = 0; n <= 200; ++n) {
    for (long p = 1; p <= 6; ++p) REQUIRE_NOTHROW(total_capacity_colored(n, p));
  }
}

TEST_CASE("fibonacci polynomial convolution") {
  const TriPoly p = TriPoly::p();
  CHECK(fib_conv(3).lhs == 3 * p * p + 2);
  CHECK(fib_conv(3).rhs == 3 * p * p + 2);
  for (int n = 0; n <= 40; ++n) REQUIRE(fib_conv(n).lhs == fib_conv(n).rhs);
}

TEST_CASE("marked identity") {
  CHECK(marked_identity(6).lhs == 38);
  CHECK(marked_identity(6).rhs == 38);
  for (int n = 0; n <= 100; ++n) REQUIRE(marked_identity(n).lhs == marked_identity(n).rhs);
}

TEST_CASE("corollary sides") {
  CHECK(corollary_sides(6, 1).lhs == 3);
  CHECK(corollary_sides(6, 1).rhs == 3);
  CHECK(corollary_sides(6, 3).lhs == -1);
  CHECK(corollary_sides(6, 3).rhs == -1);
  CHECK(corollary_sides(5, 2).lhs == 1);
  CHECK(corollary_sides(5, 2).rhs == 1);
  CHECK_THROWS_AS(corollary_sides(4, 1), std::out_of_range);
  CHECK_THROWS_AS(corollary_sides(6, 4), std::invalid_argument);

  // Left sides against direct double sums with fresh binomials.
  for (int n = 5; n <= 40; ++n) {
    BigInt s1 = 0, s2 = 0, s3 = 0;
    for (int k = 1; k <= n - 1; ++k) {
      for (int r = 1; 2 * r <= k - 2; ++r) {
        s1 += BigInt(n - k) * binomial(k - r - 2, r - 1);
        s2 += BigInt(n - k) * (k - r - 2) * binomial(k - r - 3, r - 1);
        s3 += BigInt(n - k) * ((k - 1) % 2 == 0 ? 1 : -1) * binomial(k - r - 2, r - 1);
      }
    }
    CAPTURE(n);
    REQUIRE(corollary_sides(n, 1).lhs == s1);
    REQUIRE(corollary_sides(n, 2).lhs == s2);
    REQUIRE(corollary_sides(n, 3).lhs == s3);
  }
}
