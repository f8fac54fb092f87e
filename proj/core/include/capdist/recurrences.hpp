#pragma once

#include <vector>

#include "capdist/tripoly.hpp"

namespace capdist {

/// Entries 0..N of a polynomial sequence.
using PolySeq = std::vector<TriPoly>;

/// Capacity distributions b_0..b_N from the third-order recurrence
///   b_n = (1+y) b_{n-1} + (1-y) b_{n-2} - b_{n-3} + 1 - y,   n >= 3.
PolySeq b_seq_rec3(int N);

/// Capacity distributions b_0..b_N from the fourth-order recurrence
///   b_n = (2+y) b_{n-1} - 2y b_{n-2} - (2-y) b_{n-3} + b_{n-4},   n >= 4,
/// seeded with b_0 = b_1 = 1, b_2 = 2, b_3 = 3.
PolySeq b_seq_rec4(int N);

/// Joint (capacity, ones, sigma) distributions split by final part.
struct TrivariateSeq {
  PolySeq total;           // sum over B_n of p^tau q^sigma y^cap
  PolySeq ending_in_one;   // restricted to members ending in 1
  PolySeq ending_in_two;   // restricted to members ending in 2
};

/// Builds the trivariate sequence from the last-part recurrences
///   ending_in_one[n] = p * total[n-1]
///   ending_in_two[n] = p^{n-2} q^{n-1} + sum_{j=2}^{n-2} (py)^{j-2} q^{n-1} ending_in_two[n-j].
TrivariateSeq bpq_seq(int N);

/// d(0..N) by d(n) = d(n-1) + 2 d(n-2) - 2 d(n-3), n >= 4.
std::vector<BigInt> d_seq_rec1(int N);

/// d(0..N) by d(n) = 2 d(n-2) + 1.
std::vector<BigInt> d_seq_rec2(int N);

}  // namespace capdist
