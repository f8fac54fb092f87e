#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "capdist/composition.hpp"
#include "capdist/tripoly.hpp"

namespace capdist {

/// Run-length code of a member of B_{n,k}, k >= 1:
///   1^x 2^{a_0} 1 2^{a_1} 1 ... 1 2^{a_k} 1^y
/// with a_0, a_k >= 1 and x + y + 2 * sum(a) = n - k.
struct BnkCode {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::vector<std::uint64_t> a;

  friend bool operator==(const BnkCode&, const BnkCode&) = default;
};

/// Throws std::invalid_argument unless `c` has parts in {1,2} and capacity k >= 1.
BnkCode encode_bnk(const Composition& c, std::uint64_t k);

/// Throws std::invalid_argument when the code violates its invariants for (n, k).
Composition decode_bnk(std::uint64_t n, std::uint64_t k, const BnkCode& code);

// Sign-reversing involution on K_n. Write a member of K_n as 1^x 2 alpha 2 1^y
// with x and y maximal (alpha nonempty).
//   stage 1: x >= 1 and alpha = alpha' 1   <->  1^{x-1} 2 alpha' 2 2 1^y
//            (the reverse direction applies to any alpha = alpha' 2)
//   stage 2, on the stage-1 survivors 2 alpha' 1 2 1^y:
//            2 alpha'' 2 1 2 1^y  <->  2 alpha'' 1 1 2 1^{y+1}
// Fixed points: 2 1 2 1^{n-5} (sign -1) and 2 alpha'' 1 1 2 (sign (-1)^n).
enum class InvolutionKind { stage1, stage2, fixed };
enum class FixedClass { none, rho, terminal_double_one };

struct InvolutionStep {
  InvolutionKind kind = InvolutionKind::fixed;
  std::optional<Composition> partner;
  FixedClass fixed_class = FixedClass::none;
};

/// Throws std::invalid_argument when `c` is not in K_n.
InvolutionStep involution_map(const Composition& c);

/// Sum of the signs of the fixed points of the involution on K_n (n >= 5),
/// found by running the map over every member of K_n.
BigInt knprime_signsum(std::uint64_t n);

// Maps behind the two recurrences for d(n) = |D_n|.

/// Sends c in D_{n-2} to D_n. If the last part z is even: op 1 gives z+2,
/// op 2 appends a 2. If z is odd: op 1 gives z+2, op 2 replaces z by z+1, 1.
Composition d_rec2_map(const Composition& c, std::uint64_t n, int op);

/// The single member of D_n missed by d_rec2_map: (n-2, 2) for odd n, (n-1, 1) for even n.
Composition d_rec2_exceptional(std::uint64_t n);

/// Sends c in D_{n-2} ending in 1 to a member of D_n ending in 1. Op 1 inserts
/// a 2 before the final 1; op 2 adds 2 to the penultimate part.
Composition d_rec1_map(const Composition& c, std::uint64_t n, int op);

/// Exhaustive marked-composition counts over B_n: first every way to mark a
/// single 1, then only those whose marked 1 lies in an initial or terminal run.
struct MarkedCounts {
  BigInt all_marked;
  BigInt non_water_marked;
};

MarkedCounts marked_sets(std::uint64_t n);

}  // namespace capdist
