#include <doctest.h>

#include "capdist/recurrences.hpp"
#include "oracles.hpp"

using namespace capdist;

namespace {

TriPoly brute_b(int n) {
  TriPoly out;
  for (const auto& [k, count] : oracle::capacity_histogram(n)) {
    out.add_term({static_cast<std::uint32_t>(k), 0, 0}, BigInt(static_cast<unsigned long>(count)));
  }
  return out;
}

TriPoly brute_bpq(int n) {
  TriPoly out;
  for (const auto& [key, count] : oracle::trivariate(n)) {
    const auto [cap, ones, sigma] = key;
    out.add_term({static_cast<std::uint32_t>(cap), static_cast<std::uint32_t>(ones), static_cast<std::uint32_t>(sigma)},
                 BigInt(static_cast<unsigned long>(count)));
  }
  return out;
}

}  // namespace

TEST_CASE("capacity distribution recurrences") {
  const TriPoly y = TriPoly::y();
  const PolySeq r3 = b_seq_rec3(18);
  const PolySeq r4 = b_seq_rec4(18);
  CHECK(r3[6] == 10 + 2 * y + y * y);
  for (int n = 0; n <= 18; ++n) {
    CAPTURE(n);
    REQUIRE(r3[n] == brute_b(n));
    REQUIRE(r4[n] == brute_b(n));
  }
  CHECK(b_seq_rec3(0).size() == 1);
  CHECK(b_seq_rec4(2).size() == 3);
  CHECK_THROWS(b_seq_rec3(-1));
}

TEST_CASE("trivariate recurrence") {
  const TriPoly y = TriPoly::y(), p = TriPoly::p(), q = TriPoly::q();
  auto qq = [&](std::uint32_t e) { return TriPoly::q(e); };
  const TriPoly expected_b6 = qq(9) + p * p * qq(4) * (1 + qq(2) + qq(4)) + p * p * qq(5) * y * (1 + qq(2) + q * y) +
                            TriPoly::p(4) * q * (1 + q + qq(2) + qq(3) + qq(4)) + TriPoly::p(6);
  const TrivariateSeq seq = bpq_seq(14);
  CHECK(seq.total[6] == expected_b6);
  for (int n = 0; n <= 14; ++n) {
    CAPTURE(n);
    REQUIRE(seq.total[n] == brute_bpq(n));
    if (n >= 1) REQUIRE(seq.total[n] == seq.ending_in_one[n] + seq.ending_in_two[n]);
    REQUIRE(specialize(seq.total[n], std::nullopt, 1, 1) == brute_b(n));
  }
}

TEST_CASE("d(n) recurrences") {
  const auto a = d_seq_rec1(20);
  const auto b = d_seq_rec2(20);
  REQUIRE(a.size() == 21);
  for (int n = 0; n <= 20; ++n) {
    const BigInt count = static_cast<unsigned long>(oracle::compositions_even_inside(n).size());
    CAPTURE(n);
    REQUIRE(a[n] == count);
    REQUIRE(b[n] == count);
  }
  const long first[] = {1, 1, 2, 3, 5, 7};
  for (int n = 0; n <= 5; ++n) CHECK(a[n] == first[n]);
}
