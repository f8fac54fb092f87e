#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "capdist/closed_forms.hpp"

namespace capdist {

struct CheckFailure {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::string expected;
  std::string actual;
};

/// Outcome of one verification suite. Passes iff `failures` is empty.
struct VerifyReport {
  std::string suite;
  std::string range;
  std::uint64_t checks = 0;
  std::vector<CheckFailure> failures;
  std::chrono::milliseconds elapsed{0};

  bool pass() const { return failures.empty(); }
};

/// {"suite","pass","checks","failures":[{"params","expected","actual"}],"ms"}.
/// With include_timing = false, "ms" is written as 0 so output is reproducible.
nlohmann::ordered_json to_json(const VerifyReport& report, bool include_timing = true);

/// Upper parameter limits for the suites. Defaults keep `run_all` to a few
/// minutes on one core.
struct Bounds {
  int brute_max = 28;       // exhaustive B_n enumeration
  int tri_max = 22;         // exhaustive trivariate (p, q, y) distributions
  int symbolic_max = 60;    // recurrence and series cross-checks
  int closed_max = 200;     // closed-form-only identities
  int bijection_max = 20;   // involution, d-maps, inclusion-exclusion, marked sets
  int codec_max = 18;       // B_{n,k} codec
  int d_max = 24;           // d(n) routes
  int bnkj_max = 24;
  int asymptotic_n = 10000; // fixed; not affected by capped()

  /// Every limit except asymptotic_n clamped to at most n_max.
  Bounds capped(int n_max) const;
};

/// Closed-form evaluators consumed by the suites. The reference table points
/// at the library functions; tests substitute mutated copies.
struct ClosedForms {
  std::function<BigInt(int)> fib;
  std::function<BigInt(int)> w0;
  std::function<BigInt(int, int)> wnk;
  std::function<BigInt(int)> total_capacity;
  std::function<BigInt(int)> sign_balance;
  std::function<BigInt(int, int, int)> bnkj;
  std::function<BigInt(int, long)> total_capacity_colored;
  std::function<PolyPair(int)> fib_conv;
  std::function<IntPair(int)> marked_identity;
  std::function<IntPair(int, int)> corollary_sides;

  static ClosedForms reference();
};

class UnknownSuiteError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Suite names in catalog order.
const std::vector<std::string>& suite_names();

/// Runs one suite. Throws UnknownSuiteError for names not in suite_names().
VerifyReport run_suite(std::string_view name, const Bounds& bounds,
                       const ClosedForms& forms = ClosedForms::reference());

/// Runs every suite on up to `threads` workers; reports come back in catalog order.
std::vector<VerifyReport> run_all(const Bounds& bounds, unsigned threads = 1,
                                  const ClosedForms& forms = ClosedForms::reference());

/// 0 when every report passes, 1 otherwise.
int verify_exit_code(const std::vector<VerifyReport>& reports);

}  // namespace capdist
