#include "capdist/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <concepts>
#include <map>
#include <set>
#include <thread>

#include "capdist/bijections.hpp"
#include "capdist/composition.hpp"
#include "capdist/genfunc.hpp"
#include "capdist/recurrences.hpp"

namespace capdist {

nlohmann::ordered_json to_json(const VerifyReport& report, bool include_timing) {
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"params", f.params}, {"expected", f.expected}, {"actual", f.actual}});
  }
  return {{"suite", report.suite},
          {"pass", report.pass()},
          {"checks", report.checks},
          {"failures", failures},
          {"ms", include_timing ? report.elapsed.count() : 0}};
}

Bounds Bounds::capped(int n_max) const {
  Bounds b = *this;
  for (int* field : {&b.brute_max, &b.tri_max, &b.symbolic_max, &b.closed_max, &b.bijection_max,
                     &b.codec_max, &b.d_max, &b.bnkj_max}) {
    *field = std::min(*field, n_max);
  }
  return b;
}

ClosedForms ClosedForms::reference() {
  ClosedForms f;
  f.fib = [](int n) { return capdist::fib(n); };
  f.w0 = [](int n) { return capdist::w0(n); };
  f.wnk = [](int n, int k) { return capdist::wnk(n, k); };
  f.total_capacity = [](int n) { return capdist::total_capacity(n); };
  f.sign_balance = [](int n) { return capdist::sign_balance(n); };
  f.bnkj = [](int n, int k, int j) { return capdist::bnkj(n, k, j); };
  f.total_capacity_colored = [](int n, long p) { return capdist::total_capacity_colored(n, p); };
  f.fib_conv = [](int n) { return capdist::fib_conv(n); };
  f.marked_identity = [](int n) { return capdist::marked_identity(n); };
  f.corollary_sides = [](int n, int which) { return capdist::corollary_sides(n, which); };
  return f;
}

namespace {

using Params = nlohmann::ordered_json;

std::string show(const BigInt& v) { return v.get_str(); }
std::string show(const TriPoly& v) { return to_text(v); }
std::string show(const std::string& v) { return v; }
template <std::integral T>
std::string show(T v) {
  return std::to_string(v);
}

class Checker {
 public:
  explicit Checker(VerifyReport& report) : report_(report) {}

  template <class E, class A>
  void equal(Params params, const E& expected, const A& actual) {
    ++report_.checks;
    if (!(expected == actual)) fail(std::move(params), show(expected), show(actual));
  }

  void truth(Params params, bool ok, const std::string& claim) {
    ++report_.checks;
    if (!ok) fail(std::move(params), claim, "false");
  }

  /// Runs `fn`; an escaping exception is recorded as a failed check.
  template <class Fn>
  void guarded(const Params& params, Fn&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      ++report_.checks;
      fail(params, "no exception", e.what());
    }
  }

 private:
  void fail(Params params, std::string expected, std::string actual) {
    report_.failures.push_back({std::move(params), std::move(expected), std::move(actual)});
  }

  VerifyReport& report_;
};

Params at_n(int n) { return {{"n", n}}; }

BigInt to_big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

// Exhaustive capacity histograms: counts[n][k] = |B_{n,k}|.
std::vector<std::vector<std::uint64_t>> brute_capacity_counts(int N) {
  std::vector<std::vector<std::uint64_t>> counts(static_cast<std::size_t>(std::max(N, -1) + 1));
  for (int n = 0; n <= N; ++n) {
    auto& row = counts[n];
    row.assign(static_cast<std::size_t>(n) + 1, 0);
    for_each_B(static_cast<std::uint64_t>(n), [&](PartsView c) { ++row[capacity(c)]; });
  }
  return counts;
}

TriPoly poly_from_counts(const std::vector<std::uint64_t>& counts) {
  TriPoly out;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    out.add_term({static_cast<std::uint32_t>(k), 0, 0}, to_big(counts[k]));
  }
  return out;
}

// Exhaustive sum of p^tau q^sigma y^cap over B_n; optionally only members ending in 2.
TriPoly brute_bpq(int n, bool only_ending_in_two = false) {
  std::map<Exponents, std::uint64_t, GradedLex> acc;
  for_each_B(static_cast<std::uint64_t>(n), [&](PartsView c) {
    if (only_ending_in_two && (c.empty() || c.back() != 2)) return;
    const StatProfile s = stats(c);
    ++acc[{static_cast<std::uint32_t>(s.capacity), static_cast<std::uint32_t>(s.tau),
           static_cast<std::uint32_t>(*s.sigma)}];
  });
  TriPoly out;
  for (const auto& [e, count] : acc) out.add_term(e, to_big(count));
  return out;
}

std::string range_upto(int lo, int hi) {
  return std::to_string(lo) + "<=n<=" + std::to_string(hi);
}

// ---------------------------------------------------------------------------
// Suites

void suite_dist3way(Checker& check, const Bounds& b, const ClosedForms&, std::string& range) {
  const int N = b.brute_max;
  const int S = std::max(b.symbolic_max, N);
  range = range_upto(0, N) + " (rec3 = rec4 to n=" + std::to_string(S) + ")";
  const auto counts = brute_capacity_counts(N);
  const PolySeq rec3 = b_seq_rec3(S);
  const PolySeq rec4 = b_seq_rec4(S);
  const XSeries gf = gf_F(static_cast<std::size_t>(std::max(N, 0)));
  for (int n = 0; n <= N; ++n) {
    const TriPoly brute = poly_from_counts(counts[n]);
    check.equal(Params{{"n", n}, {"route", "rec3"}}, brute, rec3[n]);
    check.equal(Params{{"n", n}, {"route", "rec4"}}, brute, rec4[n]);
    check.equal(Params{{"n", n}, {"route", "gf_F"}}, brute, gf[n]);
    const std::uint32_t max_deg = n >= 5 ? static_cast<std::uint32_t>(n - 4) : 0;
    check.truth(Params{{"n", n}, {"route", "degree"}}, brute.degree_y() <= max_deg,
                "deg_y b_n <= max(0, n-4)");
  }
  for (int n = N + 1; n <= S; ++n) check.equal(Params{{"n", n}, {"route", "rec3=rec4"}}, rec3[n], rec4[n]);
}

void suite_distpq(Checker& check, const Bounds& b, const ClosedForms&, std::string& range) {
  const int N = b.tri_max;
  range = range_upto(0, N);
  if (N < 0) return;
  const auto order = static_cast<std::size_t>(N);
  const TrivariateSeq rec = bpq_seq(N);
  const XSeries fpq = gf_Fpq(order);
  const XSeries fp1 = gf_Fp1(order);
  const PolySeq b_y = b_seq_rec3(N);
  for (int n = 0; n <= N; ++n) {
    const TriPoly brute = brute_bpq(n);
    check.equal(Params{{"n", n}, {"route", "recurrence"}}, brute, rec.total[n]);
    check.equal(Params{{"n", n}, {"route", "gf_Fpq"}}, brute, fpq[n]);
    check.equal(Params{{"n", n}, {"route", "ending_in_two"}}, brute_bpq(n, true), rec.ending_in_two[n]);
    check.equal(Params{{"n", n}, {"route", "gf_Fp1 = gf_Fpq(q=1)"}}, specialize(fpq[n], {}, {}, 1), fp1[n]);
    check.equal(Params{{"n", n}, {"route", "b(y;1,1) = b(y)"}}, b_y[n], specialize(brute, {}, 1, 1));
  }
  check.truth(Params{{"order", N}, {"route", "F2 functional equation"}},
              f2_functional_check(f2_from_fpq(fpq)), "residual vanishes");
}

void suite_wnk(Checker& check, const Bounds& b, const ClosedForms& cf, std::string& range) {
  const int N = b.brute_max;
  range = range_upto(0, N);
  if (N < 0) return;
  const auto counts = brute_capacity_counts(N);
  const auto order = static_cast<std::size_t>(N);
  const XSeries g0 = gf_w0(order);
  std::vector<XSeries> gk;
  for (int k = 1; k <= std::max(N - 4, 0); ++k) gk.push_back(gf_wk(k, order));
  for (int n = 0; n <= N; ++n) {
    check.equal(Params{{"n", n}, {"k", 0}, {"route", "closed"}}, to_big(counts[n][0]), cf.w0(n));
    check.equal(Params{{"n", n}, {"k", 0}, {"route", "gf"}}, TriPoly(to_big(counts[n][0])), g0[n]);
    BigInt total = cf.w0(n);
    for (int k = 1; k <= n; ++k) {
      const BigInt brute = to_big(counts[n][k]);
      check.equal(Params{{"n", n}, {"k", k}, {"route", "closed"}}, brute, cf.wnk(n, k));
      if (k <= static_cast<int>(gk.size())) {
        check.equal(Params{{"n", n}, {"k", k}, {"route", "gf"}}, TriPoly(brute), gk[k - 1][n]);
      }
      total += cf.wnk(n, k);
    }
    check.equal(Params{{"n", n}, {"route", "sum_k w(n,k) = f_n"}}, cf.fib(n), total);
  }
}

void suite_bnkj(Checker& check, const Bounds& b, const ClosedForms& cf, std::string& range) {
  const int N = b.bnkj_max;
  range = range_upto(0, N);
  for (int n = 0; n <= N; ++n) {
    std::map<std::pair<int, int>, std::uint64_t> brute;  // (k, j) -> count
    for_each_B(static_cast<std::uint64_t>(n), [&](PartsView c) {
      const StatProfile s = stats(c);
      ++brute[{static_cast<int>(s.capacity), static_cast<int>(s.tau)}];
    });
    for (int j = n % 2; j <= n; j += 2) {
      for (int k = 0; k <= j; ++k) {
        const auto it = brute.find({k, j});
        const BigInt expected = it == brute.end() ? BigInt(0) : to_big(it->second);
        check.guarded(Params{{"n", n}, {"k", k}, {"j", j}}, [&] {
          check.equal(Params{{"n", n}, {"k", k}, {"j", j}}, expected, cf.bnkj(n, k, j));
        });
      }
    }
    for (int k = 0; k <= n; ++k) {
      BigInt sum = 0;
      for (int j = n % 2; j <= n; j += 2) sum += cf.bnkj(n, k, j);
      const BigInt w = k == 0 ? cf.w0(n) : cf.wnk(n, k);
      check.equal(Params{{"n", n}, {"k", k}, {"route", "sum_j"}}, w, sum);
    }
  }
}

void suite_totcap(Checker& check, const Bounds& b, const ClosedForms& cf, std::string& range) {
  const int N = b.brute_max;
  const int S = std::max(b.symbolic_max, 0);
  range = range_upto(0, N) + " brute, " + range_upto(0, S) + " symbolic";
  const auto counts = brute_capacity_counts(N);
  for (int n = 0; n <= N; ++n) {
    BigInt brute = 0;
    for (std::size_t k = 1; k < counts[n].size(); ++k) brute += to_big(counts[n][k] * k);
    check.equal(Params{{"n", n}, {"route", "brute"}}, brute, cf.total_capacity(n));
    BigInt weighted = 0;
    for (int k = 1; k <= n; ++k) weighted += k * cf.wnk(n, k);
    check.equal(Params{{"n", n}, {"route", "sum_k k w(n,k)"}}, weighted, cf.total_capacity(n));
  }
  const PolySeq rec = b_seq_rec3(S);
  const auto order = static_cast<std::size_t>(S);
  const XSeries tot = gf_totcap(false, order);
  const XSeries dF = gf_F(order).map([](const TriPoly& c) { return specialize(poly_dy(c), 1, {}, {}); });
  for (int n = 0; n <= S; ++n) {
    const BigInt closed = cf.total_capacity(n);
    check.equal(Params{{"n", n}, {"route", "d/dy rec3 at y=1"}}, poly_eval_int(poly_dy(rec[n]), 1, 1, 1), closed);
    check.equal(Params{{"n", n}, {"route", "gf_totcap"}}, tot[n], TriPoly(closed));
    check.equal(Params{{"n", n}, {"route", "d/dy gf_F at y=1"}}, dF[n], TriPoly(closed));
  }
}

void suite_totcap_colored(Checker& check, const Bounds& b, const ClosedForms& cf, std::string& range) {
  const int T = b.tri_max;
  const int S = std::max(b.symbolic_max, 0);
  const int C = b.closed_max;
  range = range_upto(0, T) + " brute, " + range_upto(0, C) + " divisibility";
  for (int n = 0; n <= T; ++n) {
    BigInt brute[4] = {0, 0, 0, 0};
    for_each_B(static_cast<std::uint64_t>(n), [&](PartsView c) {
      const StatProfile s = stats(c);
      if (s.capacity == 0) return;
      for (long p = 1; p <= 3; ++p) {
        BigInt w;
        mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(p), s.tau);
        brute[p] += w * static_cast<unsigned long>(s.capacity);
      }
    });
    for (long p = 1; p <= 3; ++p) {
      const Params params{{"n", n}, {"p", p}};
      check.guarded(params, [&] { check.equal(params, brute[p], cf.total_capacity_colored(n, p)); });
    }
  }
  for (int n = 0; n <= C; ++n) {
    for (long p = 1; p <= 3; ++p) {
      const Params params{{"n", n}, {"p", p}, {"route", "exact division"}};
      check.guarded(params, [&] { cf.total_capacity_colored(n, p); });
    }
  }
  const auto order = static_cast<std::size_t>(S);
  const XSeries sym = gf_totcap(true, order);
  for (int n = 0; n <= S; ++n) {
    check.guarded(at_n(n), [&] {
      check.equal(Params{{"n", n}, {"route", "p=1 reduction"}}, cf.total_capacity(n),
                  cf.total_capacity_colored(n, 1));
      for (long p = 1; p <= 3; ++p) {
        check.equal(Params{{"n", n}, {"p", p}, {"route", "gf_totcap symbolic"}},
                    poly_eval_int(sym[n], 1, p, 1), cf.total_capacity_colored(n, p));
      }
    });
  }
  const auto tri_order = static_cast<std::size_t>(std::max(T, 0));
  const XSeries dFp1 = gf_Fp1(tri_order).map([](const TriPoly& c) { return specialize(poly_dy(c), 1, {}, {}); });
  const XSeries sym_tri = sym.truncated(std::min(order, tri_order));
  for (std::size_t n = 0; n <= sym_tri.order(); ++n) {
    check.equal(Params{{"n", n}, {"route", "d/dy gf_Fp1 at y=1"}}, sym_tri[n], dFp1[n]);
  }
}

void suite_signbal(Checker& check, const Bounds& b, const ClosedForms& cf, std::string& range) {
  const int N = b.brute_max;
  const int S = std::max(b.symbolic_max, 0);
  range = range_upto(0, N) + " brute, involution to n=" + std::to_string(b.bijection_max);
  const auto counts = brute_capacity_counts(N);
  for (int n = 0; n <= N; ++n) {
    BigInt brute = 0;
    for (std::size_t k = 0; k < counts[n].size(); ++k) {
      brute += (k % 2 == 0 ? 1 : -1) * to_big(counts[n][k]);
    }
    check.equal(Params{{"n", n}, {"route", "brute b_n(-1)"}}, brute, cf.sign_balance(n));
    BigInt alternating = cf.w0(n);
    for (int k = 1; k <= n; ++k) alternating += (k % 2 == 0 ? 1 : -1) * cf.wnk(n, k);
    check.equal(Params{{"n", n}, {"route", "sum_k (-1)^k w(n,k)"}}, alternating, cf.sign_balance(n));
  }
  const PolySeq rec = b_seq_rec3(S);
  const auto order = static_cast<std::size_t>(S);
  const XSeries at_minus_one = gf_F(order).map([](const TriPoly& c) { return specialize(c, -1, {}, {}); });
  const XSeries rational = gf_F_at_minus_one(order);
  for (int n = 0; n <= S; ++n) {
    const BigInt closed = cf.sign_balance(n);
    check.equal(Params{{"n", n}, {"route", "rec3 at y=-1"}}, poly_eval_int(rec[n], -1, 1, 1), closed);
    check.equal(Params{{"n", n}, {"route", "gf_F at y=-1"}}, at_minus_one[n], TriPoly(closed));
    check.equal(Params{{"n", n}, {"route", "rational F(x,-1)"}}, rational[n], TriPoly(closed));
  }
  for (int n = 5; n <= b.bijection_max; ++n) {
    const BigInt via_involution = knprime_signsum(static_cast<std::uint64_t>(n)) + (2 * n - 3);
    check.equal(Params{{"n", n}, {"route", "involution + |B_n - K_n|"}}, via_involution, cf.sign_balance(n));
    check.equal(Params{{"n", n}, {"route", "fixed-point signs"}},
                BigInt(-1) + (n % 2 == 0 ? 1 : -1) * cf.fib(n - 6),
                knprime_signsum(static_cast<std::uint64_t>(n)));
  }
}

void suite_diag(Checker& check, const Bounds& b, const ClosedForms&, std::string& range) {
  const int N = b.d_max;
  range = range_upto(0, N);
  const auto counts = brute_capacity_counts(N);
  const auto d = d_seq_rec2(std::max(N, 0));
  for (int n = 0; n <= N; ++n) {
    BigInt diagonal = 0;
    for (int k = 0; k <= n; ++k) {
      const auto& row = counts[n - k];
      if (static_cast<std::size_t>(k) < row.size()) diagonal += to_big(row[k]);
    }
    check.equal(Params{{"n", n}, {"route", "sum_k w(n-k,k)"}}, d[n], diagonal);
  }
}

// A052955 from offset 0; d(n) = A052955(n-1) for n >= 1.
constexpr std::uint64_t kA052955[] = {1,    2,    3,    5,    7,    11,   15,   23,   31,
                                      47,   63,   95,   127,  191,  255,  383,  511,  767,
                                      1023, 1535, 2047, 3071, 4095, 6143, 8191, 12287, 16383};

void suite_d_recs(Checker& check, const Bounds& b, const ClosedForms&, std::string& range) {
  const int N = b.d_max;
  range = range_upto(0, N) + ", maps to n=" + std::to_string(b.bijection_max);
  if (N >= 0) {
    const auto r1 = d_seq_rec1(N);
    const auto r2 = d_seq_rec2(N);
    const XSeries g = gf_d(static_cast<std::size_t>(N));
    for (int n = 0; n <= N; ++n) {
      std::uint64_t count = 0;
      for_each_D(static_cast<std::uint64_t>(n), [&](PartsView) { ++count; });
      check.equal(Params{{"n", n}, {"route", "rec1"}}, to_big(count), r1[n]);
      check.equal(Params{{"n", n}, {"route", "rec2"}}, to_big(count), r2[n]);
      check.equal(Params{{"n", n}, {"route", "gf_d"}}, TriPoly(to_big(count)), g[n]);
      if (n >= 1 && static_cast<std::size_t>(n - 1) < std::size(kA052955)) {
        check.equal(Params{{"n", n}, {"route", "A052955"}}, to_big(kA052955[n - 1]), r2[n]);
      }
    }
  }

  for (int n = 3; n <= b.bijection_max; ++n) {
    const auto un = static_cast<std::uint64_t>(n);
    const auto target = enumerate_D(un);
    const std::set<Composition> target_set(target.begin(), target.end());

    // Recurrence d(n) = 2 d(n-2) + 1.
    std::vector<Composition> images;
    for (const auto& c : enumerate_D(un - 2)) {
      for (int op = 1; op <= 2; ++op) images.push_back(d_rec2_map(c, un, op));
    }
    images.push_back(d_rec2_exceptional(un));
    const std::set<Composition> image_set(images.begin(), images.end());
    check.equal(Params{{"n", n}, {"map", "rec2"}, {"route", "injective"}}, images.size(), image_set.size());
    check.truth(Params{{"n", n}, {"map", "rec2"}, {"route", "onto D_n"}}, image_set == target_set,
                "image equals D_n");

    // Recurrence d(n) = d(n-1) + 2 d(n-2) - 2 d(n-3), ending-in-1 part.
    if (n < 4) continue;
    std::vector<Composition> ones_images;
    for (const auto& c : enumerate_D(un - 2)) {
      if (c.parts().back() != 1) continue;
      for (int op = 1; op <= 2; ++op) ones_images.push_back(d_rec1_map(c, un, op));
    }
    std::set<Composition> ending_in_one;
    for (const auto& c : target) {
      if (c.parts().back() == 1) ending_in_one.insert(c);
    }
    const std::set<Composition> ones_set(ones_images.begin(), ones_images.end());
    check.equal(Params{{"n", n}, {"map", "rec1"}, {"route", "injective"}}, ones_images.size(), ones_set.size());
    check.truth(Params{{"n", n}, {"map", "rec1"}, {"route", "onto D_n ending in 1"}}, ones_set == ending_in_one,
                "image equals members of D_n ending in 1");
    const std::size_t d2 = enumerate_D(un - 2).size();
    const std::size_t d3 = enumerate_D(un - 3).size();
    check.equal(Params{{"n", n}, {"map", "rec1"}, {"route", "count"}}, 2 * (d2 - d3), ending_in_one.size());
  }
}

void suite_gf_all(Checker& check, const Bounds& b, const ClosedForms& cf, std::string& range) {
  const int G = std::max(b.d_max, 0);
  const int S = std::max(b.symbolic_max, 0);
  const int T = std::max(b.tri_max, 0);
  range = "orders " + std::to_string(G) + "/" + std::to_string(S) + "/" + std::to_string(T);
  const auto g_order = static_cast<std::size_t>(G);
  const auto s_order = static_cast<std::size_t>(S);

  XSeries by_k = gf_w0(g_order);
  for (int k = 1; k <= G; ++k) by_k += gf_wk(k, g_order) * TriPoly::y(static_cast<std::uint32_t>(k));
  const XSeries F_g = gf_F(g_order);
  for (int n = 0; n <= G; ++n) check.equal(Params{{"n", n}, {"route", "sum_k y^k W_k + W_0"}}, F_g[n], by_k[n]);

  const XSeries F = gf_F(s_order);
  const XSeries F_y1 = F.map([](const TriPoly& c) { return specialize(c, 1, {}, {}); });
  const XSeries fib_gf = series_invert(XSeries(s_order, {1, -1, -1}));
  const XSeries partial_sums = rational_series(fib_gf, XSeries(s_order, {1, -1}));
  const XSeries Fp1_p1 = gf_Fp1(s_order).map([](const TriPoly& c) { return specialize(c, {}, 1, {}); });
  const XSeries F_m1 = F.map([](const TriPoly& c) { return specialize(c, -1, {}, {}); });
  const XSeries F_m1_rational = gf_F_at_minus_one(s_order);
  const auto d = d_seq_rec1(S);
  const XSeries dg = gf_d(s_order);
  for (int n = 0; n <= S; ++n) {
    check.equal(Params{{"n", n}, {"route", "F(x,1) = fib"}}, TriPoly(cf.fib(n)), F_y1[n]);
    check.equal(Params{{"n", n}, {"route", "1/(1-x-x^2)"}}, TriPoly(cf.fib(n)), fib_gf[n]);
    check.equal(Params{{"n", n}, {"route", "partial sums f_{n+2}-1"}}, TriPoly(cf.fib(n + 2) - 1), partial_sums[n]);
    check.equal(Params{{"n", n}, {"route", "F(x,y;1,1) = F(x,y)"}}, F[n], Fp1_p1[n]);
    check.equal(Params{{"n", n}, {"route", "F(x,-1) rational"}}, F_m1_rational[n], F_m1[n]);
    check.equal(Params{{"n", n}, {"route", "gf_d"}}, TriPoly(d[n]), dg[n]);
  }

  const auto t_order = static_cast<std::size_t>(T);
  const XSeries fpq = gf_Fpq(t_order);
  const XSeries fp1 = gf_Fp1(t_order);
  for (int n = 0; n <= T; ++n) {
    check.equal(Params{{"n", n}, {"route", "Fpq(q=1) = Fp1"}}, fp1[n], specialize(fpq[n], {}, {}, 1));
  }
  check.truth(Params{{"order", T}, {"route", "F2 functional equation"}}, f2_functional_check(f2_from_fpq(fpq)),
              "residual vanishes");
}

void suite_corollary(Checker& check, const Bounds& b, const ClosedForms& cf, std::string& range) {
  range = range_upto(5, b.closed_max);
  for (int n = 5; n <= b.closed_max; ++n) {
    for (int which = 1; which <= 3; ++which) {
      const Params params{{"n", n}, {"identity", which}};
      check.guarded(params, [&] {
        const IntPair sides = cf.corollary_sides(n, which);
        check.equal(params, sides.lhs, sides.rhs);
        BigInt linked;
        switch (which) {
          case 1: linked = cf.fib(n) - cf.w0(n); break;
          case 2: linked = cf.total_capacity(n); break;
          default: linked = cf.sign_balance(n) - cf.w0(n); break;
        }
        check.equal(Params{{"n", n}, {"identity", which}, {"route", "rhs via other closed forms"}}, linked,
                    sides.rhs);
      });
    }
  }
}

void suite_fibconv(Checker& check, const Bounds& b, const ClosedForms& cf, std::string& range) {
  const int S = b.symbolic_max;
  range = range_upto(0, S);
  for (int n = 0; n <= S; ++n) {
    check.guarded(at_n(n), [&] {
      const PolyPair sides = cf.fib_conv(n);
      check.equal(at_n(n), sides.lhs, sides.rhs);
      check.equal(Params{{"n", n}, {"route", "p=1 vs marked count"}}, cf.marked_identity(n).lhs,
                  poly_eval_int(sides.rhs, 1, 1, 1));
    });
  }
}

void suite_marked(Checker& check, const Bounds& b, const ClosedForms& cf, std::string& range) {
  range = range_upto(3, b.bijection_max) + " exhaustive, " + range_upto(0, b.closed_max) + " closed";
  for (int n = 3; n <= b.bijection_max; ++n) {
    check.guarded(at_n(n), [&] {
      const MarkedCounts m = marked_sets(static_cast<std::uint64_t>(n));
      const IntPair closed = cf.marked_identity(n);
      check.equal(Params{{"n", n}, {"route", "|B*| convolution"}}, closed.lhs, m.all_marked);
      check.equal(Params{{"n", n}, {"route", "|B*| closed"}}, closed.rhs, m.all_marked);
      check.equal(Params{{"n", n}, {"route", "|B* - B'|"}}, 2 * cf.fib(n + 1) - n - 2, m.non_water_marked);
      check.equal(Params{{"n", n}, {"route", "|B'| = total capacity"}}, cf.total_capacity(n),
                  m.all_marked - m.non_water_marked);
    });
  }
  for (int n = 0; n <= b.closed_max; ++n) {
    check.guarded(at_n(n), [&] {
      const IntPair sides = cf.marked_identity(n);
      check.equal(at_n(n), sides.lhs, sides.rhs);
    });
  }
}

void suite_bijection_roundtrip(Checker& check, const Bounds& b, const ClosedForms&, std::string& range) {
  range = range_upto(5, b.codec_max);
  for (int n = 5; n <= b.codec_max; ++n) {
    const auto un = static_cast<std::uint64_t>(n);
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> slices;  // (k, r) -> count
    bool ok = true;
    std::string bad;
    for_each_B(un, [&](PartsView parts) {
      const std::uint64_t k = capacity(parts);
      if (k == 0) return;
      const Composition c(parts);
      const BnkCode code = encode_bnk(c, k);
      std::uint64_t twos = 0;
      for (auto a : code.a) twos += a;
      ++slices[{k, twos - 1}];
      const Composition back = decode_bnk(un, k, code);
      if (back != c || capacity(back) != k) {
        ok = false;
        bad = format_composition(c);
      }
    });
    check.truth(Params{{"n", n}, {"route", "decode(encode(c)) = c"}}, ok, "round trip for all of B_{n,k}, k>=1");
    if (!ok) check.equal(Params{{"n", n}, {"route", "first mismatch"}}, std::string(), bad);
    for (int k = 1; k <= n - 4; ++k) {
      for (int r = 1; 2 * r <= n - k - 2; ++r) {
        const BigInt expected = BigInt(n - k - 2 * r - 1) * binomial(k + r - 1, k);
        const auto it = slices.find({static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(r)});
        const BigInt actual = it == slices.end() ? BigInt(0) : to_big(it->second);
        check.equal(Params{{"n", n}, {"k", k}, {"r", r}}, expected, actual);
      }
    }
  }
}

void suite_involution(Checker& check, const Bounds& b, const ClosedForms& cf, std::string& range) {
  range = range_upto(5, b.bijection_max);
  for (int n = 5; n <= b.bijection_max; ++n) {
    const auto un = static_cast<std::uint64_t>(n);
    std::set<Composition> fixed;
    std::uint64_t outside_k = 0;
    std::uint64_t law_violations = 0;
    std::string first_violation;
    for_each_B(un, [&](PartsView parts) {
      if (!in_K(parts)) {
        ++outside_k;
        return;
      }
      const Composition c(parts);
      const InvolutionStep step = involution_map(c);
      if (!step.partner) {
        fixed.insert(c);
        return;
      }
      const Composition& partner = *step.partner;
      bool good = partner.n() == un && parts_in_one_two(partner) && in_K(partner);
      if (good) {
        const InvolutionStep back = involution_map(partner);
        const auto cap_a = static_cast<long>(capacity(c));
        const auto cap_b = static_cast<long>(capacity(partner));
        good = back.partner && *back.partner == c && back.kind == step.kind && std::labs(cap_a - cap_b) == 1;
      }
      if (!good) {
        ++law_violations;
        if (first_violation.empty()) first_violation = format_composition(c);
      }
    });
    check.equal(Params{{"n", n}, {"route", "involution law violations"}}, std::uint64_t{0}, law_violations);
    if (law_violations) check.equal(Params{{"n", n}, {"route", "first violation"}}, std::string(), first_violation);

    std::set<Composition> expected_fixed;
    {
      std::vector<Part> rho = {2, 1, 2};
      rho.insert(rho.end(), static_cast<std::size_t>(n - 5), 1);
      expected_fixed.insert(Composition(std::move(rho)));
    }
    if (n >= 6) {
      for_each_B(un - 6, [&](PartsView beta) {
        std::vector<Part> parts = {2};
        parts.insert(parts.end(), beta.begin(), beta.end());
        parts.insert(parts.end(), {1, 1, 2});
        expected_fixed.insert(Composition(std::move(parts)));
      });
    }
    check.truth(Params{{"n", n}, {"route", "fixed-point classification"}}, fixed == expected_fixed,
                "fixed points are 2121^{n-5} and 2 beta 1 1 2");
    check.equal(Params{{"n", n}, {"route", "fixed-point count"}}, 1 + cf.fib(n - 6), to_big(fixed.size()));
    check.equal(Params{{"n", n}, {"route", "|B_n - K_n|"}}, to_big(2 * un - 3), to_big(outside_k));
  }
}

void suite_inclusion_exclusion(Checker& check, const Bounds& b, const ClosedForms&, std::string& range) {
  const int N = b.bijection_max;
  range = range_upto(4, N);
  if (N < 4) return;
  const PolySeq bs = b_seq_rec3(N);
  const TriPoly y = TriPoly::y();
  for (int n = 4; n <= N; ++n) {
    std::vector<std::uint64_t> U(n + 1), V(n + 1), W(n + 1), X(n + 1), UV(n + 1), UW(n + 1);
    std::uint64_t vw = 0;
    for_each_B(static_cast<std::uint64_t>(n), [&](PartsView c) {
      const std::uint64_t k = capacity(c);
      const bool u = in_U(c), v = in_V(c), w = in_W(c), x = in_X(c);
      U[k] += u;
      V[k] += v;
      W[k] += w;
      X[k] += x;
      UV[k] += u && v;
      UW[k] += u && w;
      vw += v && w;
    });
    const TriPoly pU = poly_from_counts(U), pV = poly_from_counts(V), pW = poly_from_counts(W),
                  pX = poly_from_counts(X), pUV = poly_from_counts(UV), pUW = poly_from_counts(UW);
    const TriPoly nn(static_cast<long>(n));
    check.equal(Params{{"n", n}, {"route", "b_n - 1 = U+V+W-UV-UW"}}, bs[n] - 1, pU + pV + pW - pUV - pUW);
    check.equal(Params{{"n", n}, {"route", "V and W disjoint"}}, std::uint64_t{0}, vw);
    check.equal(Params{{"n", n}, {"route", "|U|"}}, bs[n - 1], pU);
    check.equal(Params{{"n", n}, {"route", "|V|"}}, y * (bs[n - 1] - nn + 1), pV);
    check.equal(Params{{"n", n}, {"route", "|U cap V|"}}, y * (bs[n - 2] - nn + 2), pUV);
    check.equal(Params{{"n", n}, {"route", "|U cap W|"}}, bs[n - 3] - 1, pUW);
    check.equal(Params{{"n", n}, {"route", "|X|"}}, y * bs[n - 2] + (1 - y) * bs[n - 3] - bs[n - 4] + 1 - y, pX);
    check.equal(Params{{"n", n}, {"route", "|W|"}},
                bs[n - 1] - y * bs[n - 2] - (1 - y) * bs[n - 3] + bs[n - 4] - 2 + y, pW);
  }
}

void suite_asymptotic_avg(Checker& check, const Bounds& b, const ClosedForms& cf, std::string& range) {
  const int n = b.asymptotic_n;
  range = "n=" + std::to_string(n);
  check.guarded(at_n(n), [&] {
    const mpq_class avg(cf.total_capacity(n), cf.fib(n));
    const double ratio = avg.get_d() * std::sqrt(5.0) / n;
    const double deviation = std::fabs(ratio - 1.0);
    check.truth(Params{{"n", n}, {"avg*sqrt5/n", ratio}}, deviation < 1e-3, "|avg*sqrt(5)/n - 1| < 1e-3");
  });
}

using SuiteFn = void (*)(Checker&, const Bounds&, const ClosedForms&, std::string&);

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
};

constexpr SuiteEntry kSuites[] = {
    {"dist3way", suite_dist3way},
    {"distpq", suite_distpq},
    {"wnk", suite_wnk},
    {"bnkj", suite_bnkj},
    {"totcap", suite_totcap},
    {"totcap_colored", suite_totcap_colored},
    {"signbal", suite_signbal},
    {"diag", suite_diag},
    {"d_recs", suite_d_recs},
    {"gf_all", suite_gf_all},
    {"corollary", suite_corollary},
    {"fibconv", suite_fibconv},
    {"marked", suite_marked},
    {"bijection_roundtrip", suite_bijection_roundtrip},
    {"involution", suite_involution},
    {"inclusion_exclusion", suite_inclusion_exclusion},
    {"asymptotic_avg", suite_asymptotic_avg},
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : kSuites) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

VerifyReport run_suite(std::string_view name, const Bounds& bounds, const ClosedForms& forms) {
  const auto it = std::find_if(std::begin(kSuites), std::end(kSuites),
                               [&](const SuiteEntry& s) { return name == s.name; });
  if (it == std::end(kSuites)) throw UnknownSuiteError("unknown suite '" + std::string(name) + "'");

  VerifyReport report;
  report.suite = it->name;
  const auto start = std::chrono::steady_clock::now();
  Checker check(report);
  check.guarded(Params{{"suite", report.suite}},
                [&] { it->fn(check, bounds, forms, report.range); });
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

std::vector<VerifyReport> run_all(const Bounds& bounds, unsigned threads, const ClosedForms& forms) {
  const auto& names = suite_names();
  std::vector<VerifyReport> reports(names.size());
  const unsigned workers = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(names.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < names.size(); ++i) reports[i] = run_suite(names[i], bounds, forms);
    return reports;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < names.size(); i = next++) reports[i] = run_suite(names[i], bounds, forms);
    });
  }
  pool.clear();
  return reports;
}

int verify_exit_code(const std::vector<VerifyReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const VerifyReport& r) { return r.pass(); }) ? 0 : 1;
}

}  // namespace capdist
