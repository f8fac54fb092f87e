#include "capdist/recurrences.hpp"

#include <algorithm>
#include <stdexcept>

#include "capdist/composition.hpp"

namespace capdist {

namespace {

void require_nonnegative(int N) {
  if (N < 0) throw std::out_of_range("sequence bound must be >= 0");
}

// Seeds are copied into the first min(N+1, size) slots.
PolySeq seeded(int N, std::initializer_list<long> seeds) {
  PolySeq out(static_cast<std::size_t>(N) + 1);
  std::size_t i = 0;
  for (long s : seeds) {
    if (i >= out.size()) break;
    out[i++] = TriPoly(s);
  }
  return out;
}

}  // namespace

PolySeq b_seq_rec3(int N) {
  require_nonnegative(N);
  PolySeq b = seeded(N, {1, 1, 2});
  const TriPoly y = TriPoly::y();
  const TriPoly one_plus_y = 1 + y;
  const TriPoly one_minus_y = 1 - y;
  for (int n = 3; n <= N; ++n) {
    b[n] = one_plus_y * b[n - 1] + one_minus_y * b[n - 2] - b[n - 3] + one_minus_y;
  }
  return b;
}

PolySeq b_seq_rec4(int N) {
  require_nonnegative(N);
  PolySeq b = seeded(N, {1, 1, 2, 3});
  const TriPoly y = TriPoly::y();
  const TriPoly two_plus_y = 2 + y;
  const TriPoly two_y = 2 * y;
  const TriPoly two_minus_y = 2 - y;
  for (int n = 4; n <= N; ++n) {
    b[n] = two_plus_y * b[n - 1] - two_y * b[n - 2] - two_minus_y * b[n - 3] + b[n - 4];
  }
  return b;
}

TrivariateSeq bpq_seq(int N) {
  require_nonnegative(N);
  const std::size_t size = static_cast<std::size_t>(N) + 1;
  TrivariateSeq s{PolySeq(size), PolySeq(size), PolySeq(size)};
  s.total[0] = 1;
  const TriPoly p = TriPoly::p();
  for (int n = 1; n <= N; ++n) {
    s.ending_in_one[n] = p * s.total[n - 1];
    if (n >= 2) {
      const auto un = static_cast<std::uint32_t>(n);
      TriPoly two = TriPoly::monomial(1, {0, un - 2, un - 1});
      for (int j = 2; j <= n - 2; ++j) {
        const auto uj = static_cast<std::uint32_t>(j);
        two += TriPoly::monomial(1, {uj - 2, uj - 2, un - 1}) * s.ending_in_two[n - j];
      }
      s.ending_in_two[n] = std::move(two);
    }
    s.total[n] = s.ending_in_one[n] + s.ending_in_two[n];
  }
  return s;
}

namespace {

std::vector<BigInt> d_seeds(int N) {
  std::vector<BigInt> d(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= std::min(N, 3); ++n) {
    std::uint64_t count = 0;
    for_each_D(static_cast<std::uint64_t>(n), [&](PartsView) { ++count; });
    d[n] = static_cast<unsigned long>(count);
  }
  return d;
}

}  // namespace

std::vector<BigInt> d_seq_rec1(int N) {
  require_nonnegative(N);
  std::vector<BigInt> d = d_seeds(N);
  for (int n = 4; n <= N; ++n) d[n] = d[n - 1] + 2 * d[n - 2] - 2 * d[n - 3];
  return d;
}

std::vector<BigInt> d_seq_rec2(int N) {
  require_nonnegative(N);
  std::vector<BigInt> d = d_seeds(N);
  for (int n = 4; n <= N; ++n) d[n] = 2 * d[n - 2] + 1;
  return d;
}

}  // namespace capdist
