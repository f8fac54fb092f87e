#pragma once

#include <shared_mutex>
#include <stdexcept>
#include <vector>

#include "capdist/tripoly.hpp"

namespace capdist {

/// Raised when an exact division inside a closed form leaves a remainder.
/// Seeing this means a formula was transcribed wrongly.
class DivisibilityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr int kMinFibIndex = -64;

/// Memo table for Fibonacci numbers (f_0 = f_1 = 1) and Fibonacci
/// polynomials in p (F_0 = 1, F_1 = p). Reads are safe from any thread.
///
/// Indices beyond the memo limit fall back to fast doubling.
class FibCache {
 public:
  static FibCache& instance();

  BigInt fib(int n);
  TriPoly fib_poly(int n);

  static constexpr int kMemoLimit = 4096;
  static constexpr int kPolyMemoLimit = 1024;

 private:
  FibCache();
  void grow_numbers(int n);
  void grow_polys(int n);

  std::shared_mutex mutex_;
  std::vector<BigInt> numbers_;  // numbers_[i] = f_i
  std::vector<TriPoly> polys_;   // polys_[i] = F_i(p)
};

/// Fibonacci with f_0 = f_1 = 1, extended to negative indices by
/// f_{-1} = 0 and f_{-m} = (-1)^m f_{m-2}. Throws std::out_of_range below -64.
BigInt fib(int n);

/// Lucas number L_m = f_m + f_{m-2}, m >= 1.
BigInt lucas(int m);

/// Fibonacci polynomial F_n(p), with F_{-1} = 0.
TriPoly fib_poly(int n);

/// F_n evaluated at an integer p, computed without building the polynomial.
BigInt fib_poly_at(int n, long p);

/// C(a, b), zero when b < 0 or a < b.
BigInt binomial(long a, long b);

/// Number of members of B_n with no water cells: 1 + floor(n^2 / 4).
BigInt w0(int n);

/// Number of members of B_n with exactly k >= 1 water cells. Zero outside 1 <= k <= n-4.
BigInt wnk(int n, int k);

/// Sum of capacities over B_n.
BigInt total_capacity(int n);

/// Number of even-capacity minus odd-capacity members of B_n.
BigInt sign_balance(int n);

/// Members of B_n with capacity k and exactly j parts equal to 1.
/// Requires 0 <= j <= n, k >= 0 and n = j (mod 2); returns 0 for j < k.
BigInt bnkj(int n, int k, int j);

/// Total capacity over B_n where every 1 carries one of p colors.
BigInt total_capacity_colored(int n, long p);

struct PolyPair {
  TriPoly lhs;
  TriPoly rhs;
};

struct IntPair {
  BigInt lhs;
  BigInt rhs;
};

/// Fibonacci-polynomial convolution: sum_{i<n} F_i F_{n-1-i} against
/// (p n F_n + 2 (n+1) F_{n-1}) / (p^2 + 4).
PolyPair fib_conv(int n);

/// Marked-composition count: sum_{i<n} f_i f_{n-1-i} against ((n+1) L_{n+1} - f_n) / 5.
IntPair marked_identity(int n);

/// Binomial double sums (which = 1, 2, 3) against their closed right-hand sides, n >= 5.
IntPair corollary_sides(int n, int which);

}  // namespace capdist
