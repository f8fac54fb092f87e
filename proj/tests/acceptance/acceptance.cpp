// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "capdist/closed_forms.hpp"
#include "capdist/genfunc.hpp"
#include "capdist/recurrences.hpp"
#include "capdist/verifier.hpp"
#include "mutants.hpp"
#include "oracles.hpp"

using namespace capdist;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note += (note.empty() ? "" : "; ") + what;
    }
  }
};

void require_suites(Outcome& o, std::initializer_list<const char*> names, const Bounds& bounds = Bounds{}) {
  for (const char* name : names) {
    const VerifyReport r = run_suite(name, bounds);
    o.require(r.pass(), std::string(name) + " has " + std::to_string(r.failures.size()) + " failure(s)");
    if (!r.failures.empty()) {
      const auto& f = r.failures.front();
      o.note += " [" + f.params.dump() + " expected " + f.expected + " got " + f.actual + "]";
    }
  }
}

TriPoly oracle_b(int n) {
  TriPoly out;
  for (const auto& [k, count] : oracle::capacity_histogram(n)) {
    out.add_term({static_cast<std::uint32_t>(k), 0, 0}, BigInt(static_cast<unsigned long>(count)));
  }
  return out;
}

TriPoly oracle_bpq(int n) {
  TriPoly out;
  for (const auto& [key, count] : oracle::trivariate(n)) {
    const auto [cap, ones, sigma] = key;
    out.add_term({static_cast<std::uint32_t>(cap), static_cast<std::uint32_t>(ones), static_cast<std::uint32_t>(sigma)},
                 BigInt(static_cast<unsigned long>(count)));
  }
  return out;
}

Outcome criterion_1() {
  Outcome o;
  const TriPoly y = TriPoly::y();
  const TriPoly expected = 10 + 2 * y + y * y;
  o.require(oracle_b(6) == expected, "brute force");
  o.require(b_seq_rec3(6)[6] == expected, "three-term recurrence");
  o.require(b_seq_rec4(6)[6] == expected, "four-term recurrence");
  o.require(gf_F(6)[6] == expected, "series coefficient");
  return o;
}

Outcome criterion_2() {
  Outcome o;
  const TriPoly y = TriPoly::y(), p = TriPoly::p(), q = TriPoly::q();
  auto qq = [](std::uint32_t e) { return TriPoly::q(e); };
  const TriPoly expected_b6 = qq(9) + p * p * qq(4) * (1 + qq(2) + qq(4)) + p * p * qq(5) * y * (1 + qq(2) + q * y) +
                            TriPoly::p(4) * q * (1 + q + qq(2) + qq(3) + qq(4)) + TriPoly::p(6);
  const TrivariateSeq seq = bpq_seq(6);
  o.require(oracle_bpq(6) == expected_b6, "brute force");
  o.require(seq.total[6] == expected_b6, "split recurrence");
  o.require(seq.ending_in_one[6] + seq.ending_in_two[6] == expected_b6, "ending-in-1 plus ending-in-2");
  o.require(gf_Fpq(6)[6] == expected_b6, "q-series coefficient");
  o.require(specialize(expected_b6, std::nullopt, 1, 1) == 10 + 2 * y + y * y, "reduces at p = q = 1");
  return o;
}

Outcome criterion_3() {
  Outcome o;
  require_suites(o, {"dist3way", "distpq"});
  return o;
}

Outcome criterion_4() {
  Outcome o;
  require_suites(o, {"wnk"});
  o.require(wnk(5, 1) == 1, "w(5,1) = 1");
  o.require(wnk(9, 3) == 7, "w(9,3) = 7");
  return o;
}

Outcome criterion_5() {
  Outcome o;
  require_suites(o, {"totcap"});
  o.require(total_capacity(6) == 4, "value 4 at n = 6");
  for (int n = 0; n <= 4; ++n) o.require(total_capacity(n) == 0, "zero at n = " + std::to_string(n));
  return o;
}

Outcome criterion_6() {
  Outcome o;
  require_suites(o, {"signbal"});
  return o;
}

Outcome criterion_7() {
  Outcome o;
  require_suites(o, {"diag", "d_recs"});
  return o;
}

Outcome criterion_8() {
  Outcome o;
  require_suites(o, {"corollary"});
  return o;
}

Outcome criterion_9() {
  Outcome o;
  require_suites(o, {"bnkj"});
  o.require(bnkj(9, 3, 3) == 4, "b(9,3,3) = 4");
  return o;
}

Outcome criterion_10() {
  Outcome o;
  require_suites(o, {"totcap_colored"});
  return o;
}

Outcome criterion_11() {
  Outcome o;
  require_suites(o, {"fibconv"});
  const TriPoly p = TriPoly::p();
  o.require(fib_conv(3).lhs == 3 * p * p + 2 && fib_conv(3).rhs == 3 * p * p + 2, "n = 3 gives 3p^2 + 2");
  return o;
}

Outcome criterion_12() {
  Outcome o;
  require_suites(o, {"involution", "bijection_roundtrip"});
  return o;
}

Outcome criterion_13() {
  Outcome o;
  require_suites(o, {"inclusion_exclusion"});
  return o;
}

Outcome criterion_14() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  require_suites(o, {"asymptotic_avg"});
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  o.require(ms.count() < 1000, "took " + std::to_string(ms.count()) + " ms");
  return o;
}

Outcome criterion_15() {
  Outcome o;
  const std::string command = std::string("\"") + CAPDIST_CLI_PATH + "\" verify all > /dev/null";
  const auto start = std::chrono::steady_clock::now();
  const int status = std::system(command.c_str());
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start);
  const int code = status != -1 && WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  o.require(code == 0, "verify all exited " + std::to_string(code));
  o.require(secs.count() < 300, "verify all took " + std::to_string(secs.count()) + " s");

  const Bounds small = Bounds{}.capped(16);
  int caught = 0, total = 0;
  for (const auto& m : mutants::all()) {
    ++total;
    const int mutant_code = verify_exit_code(run_all(small, 1, m.forms));
    if (mutant_code == 1) {
      ++caught;
    } else {
      o.require(false, "mutant survived: " + m.name);
    }
  }
  o.note += (o.note.empty() ? "" : "; ") + std::to_string(caught) + "/" + std::to_string(total) +
            " mutants caught, verify all " + std::to_string(secs.count()) + " s";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"b_6(y) by brute force, both recurrences and the series", criterion_1},
      {"trivariate b_6 equals the known polynomial on all routes", criterion_2},
      {"three-way distribution agreement n<=28, trivariate n<=22", criterion_3},
      {"w(n,k) closed form against brute force n<=28", criterion_4},
      {"total capacity closed form n<=28 brute, n<=60 recurrence", criterion_5},
      {"sign balance n<=28 and involution accounting 6<=n<=20", criterion_6},
      {"d(n) five routes n<=24 and both d-maps n<=20", criterion_7},
      {"three binomial-sum identities 5<=n<=200", criterion_8},
      {"b(n,k,j) against brute force n<=24", criterion_9},
      {"colored total capacity p in {1,2,3}, divisibility n<=200", criterion_10},
      {"Fibonacci-polynomial convolution n<=60", criterion_11},
      {"involution law, fixed points, codec round trips", criterion_12},
      {"weighted inclusion-exclusion 4<=n<=20", criterion_13},
      {"average capacity against n/sqrt(5) at n=10^4", criterion_14},
      {"verify all exits 0 in time; every mutant exits 1", criterion_15},
  };

  int failures = 0;
  int index = 0;
  for (const auto& [title, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    failures += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << index << "  " << title;
    if (!o.note.empty()) std::cout << "  (" << o.note << ")";
    std::cout << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures;
}
