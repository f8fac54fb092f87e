#include "capdist/closed_forms.hpp"

#include <mutex>
#include <string>

namespace capdist {

FibCache::FibCache() {
  numbers_ = {BigInt(1), BigInt(1)};
  polys_ = {TriPoly(1), TriPoly::p()};
}

FibCache& FibCache::instance() {
  static FibCache cache;
  return cache;
}

void FibCache::grow_numbers(int n) {
  std::unique_lock lock(mutex_);
  while (static_cast<int>(numbers_.size()) <= n) {
    const std::size_t i = numbers_.size();
    numbers_.push_back(numbers_[i - 1] + numbers_[i - 2]);
  }
}

void FibCache::grow_polys(int n) {
  std::unique_lock lock(mutex_);
  const TriPoly p = TriPoly::p();
  while (static_cast<int>(polys_.size()) <= n) {
    const std::size_t i = polys_.size();
    polys_.push_back(p * polys_[i - 1] + polys_[i - 2]);
  }
}

BigInt FibCache::fib(int n) {
  if (n < kMinFibIndex) throw std::out_of_range("fib index below " + std::to_string(kMinFibIndex));
  if (n == -1) return 0;
  if (n < -1) {
    const int m = -n;
    BigInt v = fib(m - 2);
    return m % 2 == 0 ? v : BigInt(-v);
  }
  if (n > kMemoLimit) {
    BigInt out;
    mpz_fib_ui(out.get_mpz_t(), static_cast<unsigned long>(n) + 1);
    return out;
  }
  {
    std::shared_lock lock(mutex_);
    if (n < static_cast<int>(numbers_.size())) return numbers_[static_cast<std::size_t>(n)];
  }
  grow_numbers(n);
  std::shared_lock lock(mutex_);
  return numbers_[static_cast<std::size_t>(n)];
}

TriPoly FibCache::fib_poly(int n) {
  if (n < -1) throw std::out_of_range("Fibonacci polynomial index below -1");
  if (n == -1) return TriPoly{};
  if (n > kPolyMemoLimit) throw std::out_of_range("Fibonacci polynomial index too large");
  {
    std::shared_lock lock(mutex_);
    if (n < static_cast<int>(polys_.size())) return polys_[static_cast<std::size_t>(n)];
  }
  grow_polys(n);
  std::shared_lock lock(mutex_);
  return polys_[static_cast<std::size_t>(n)];
}

BigInt fib(int n) { return FibCache::instance().fib(n); }

BigInt lucas(int m) {
  if (m < 1) throw std::out_of_range("lucas index must be >= 1");
  return fib(m) + fib(m - 2);
}

TriPoly fib_poly(int n) { return FibCache::instance().fib_poly(n); }

BigInt fib_poly_at(int n, long p) {
  if (n < -1) throw std::out_of_range("Fibonacci polynomial index below -1");
  if (n == -1) return 0;
  BigInt prev = 1;  // F_0
  if (n == 0) return prev;
  BigInt cur = p;   // F_1
  for (int i = 2; i <= n; ++i) {
    BigInt next = cur * p + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt binomial(long a, long b) {
  if (b < 0 || a < b) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

namespace {

BigInt divide_exact(const BigInt& num, const BigInt& den, const char* what) {
  if (num % den != 0) {
    throw DivisibilityError(std::string(what) + ": " + num.get_str() + " not divisible by " +
                            den.get_str());
  }
  BigInt out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

BigInt sign_power(int n) { return n % 2 == 0 ? 1 : -1; }

BigInt pow_si(long base, unsigned long exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), exp);
  if (base < 0 && exp % 2 == 1) out = -out;
  return out;
}

// Quotient of a polynomial in p alone by p^2 + 4; throws if the remainder is nonzero.
TriPoly divide_by_p2_plus_4(const TriPoly& num) {
  std::vector<BigInt> coef(num.degree_p() + 1, BigInt(0));
  for (const auto& [e, c] : num.terms()) {
    if (e.y != 0 || e.q != 0) throw std::invalid_argument("expected a polynomial in p only");
    coef[e.p] = c;
  }
  TriPoly quotient;
  for (std::size_t d = coef.size(); d-- > 2;) {
    const BigInt lead = coef[d];
    if (lead == 0) continue;
    quotient.add_term({0, static_cast<std::uint32_t>(d - 2), 0}, lead);
    coef[d] = 0;
    coef[d - 2] -= 4 * lead;
  }
  if (coef.size() > 0 && coef[0] != 0) throw DivisibilityError("p^2 + 4 does not divide polynomial");
  if (coef.size() > 1 && coef[1] != 0) throw DivisibilityError("p^2 + 4 does not divide polynomial");
  return quotient;
}

}  // namespace

BigInt w0(int n) {
  if (n < 0) throw std::out_of_range("w0 requires n >= 0");
  return 1 + BigInt(static_cast<long>(n) * n / 4);
}

BigInt wnk(int n, int k) {
  if (k <= 0) throw std::invalid_argument("wnk requires k >= 1 (use w0 for k = 0)");
  if (n < 0) throw std::out_of_range("wnk requires n >= 0");
  BigInt sum = 0;
  const int top = n - k - 2;
  for (int r = 1; 2 * r <= top; ++r) {
    sum += BigInt(n - k - 2 * r - 1) * binomial(k + r - 1, k);
  }
  return sum;
}

BigInt total_capacity(int n) {
  if (n < 0) throw std::out_of_range("total_capacity requires n >= 0");
  BigInt marked = divide_exact(BigInt(n + 1) * lucas(n + 1) - fib(n), 5, "total_capacity");
  return marked - 2 * fib(n + 1) + n + 2;
}

BigInt sign_balance(int n) {
  if (n < 0) throw std::out_of_range("sign_balance requires n >= 0");
  return BigInt(2L * n - 4) + sign_power(n) * fib(n - 6);
}

BigInt bnkj(int n, int k, int j) {
  if (n < 0 || k < 0 || j < 0) throw std::invalid_argument("bnkj arguments must be nonnegative");
  if (j > n) throw std::invalid_argument("bnkj requires j <= n");
  if ((n - j) % 2 != 0) throw std::invalid_argument("bnkj requires n = j (mod 2)");
  if (j < k) return 0;
  if (k == 0) return n == j ? BigInt(1) : BigInt(j + 1);
  if (n < j + 4) return 0;
  return BigInt(j - k + 1) * binomial((n - j - 4) / 2 + k, k);
}

BigInt total_capacity_colored(int n, long p) {
  if (n < 0) throw std::out_of_range("total_capacity_colored requires n >= 0");
  if (p < 1) throw std::invalid_argument("color count p must be >= 1");
  const BigInt pp = BigInt(p) * p;
  BigInt num = pp * n * fib_poly_at(n, p) + BigInt(2 * p) * (n + 1) * fib_poly_at(n - 1, p);
  BigInt head = divide_exact(num, pp + 4, "total_capacity_colored");
  return head - 2 * p * fib_poly_at(n + 1, p) + pow_si(p, static_cast<unsigned long>(n)) * (n + 2 * pp);
}

PolyPair fib_conv(int n) {
  if (n < 0) throw std::out_of_range("fib_conv requires n >= 0");
  PolyPair out;
  for (int i = 0; i < n; ++i) out.lhs += fib_poly(i) * fib_poly(n - i - 1);
  const TriPoly num = TriPoly::p() * TriPoly(n) * fib_poly(n) + TriPoly(2L * (n + 1)) * fib_poly(n - 1);
  out.rhs = divide_by_p2_plus_4(num);
  return out;
}

IntPair marked_identity(int n) {
  if (n < 0) throw std::out_of_range("marked_identity requires n >= 0");
  IntPair out;
  for (int i = 0; i < n; ++i) out.lhs += fib(i) * fib(n - i - 1);
  out.rhs = divide_exact(BigInt(n + 1) * lucas(n + 1) - fib(n), 5, "marked_identity");
  return out;
}

IntPair corollary_sides(int n, int which) {
  if (n < 5) throw std::out_of_range("corollary identities require n >= 5");
  if (which < 1 || which > 3) throw std::invalid_argument("identity selector must be 1, 2 or 3");
  const int m = (n - 3) / 2;
  const long quarter_sq = static_cast<long>(n) * n / 4;

  IntPair out;
  for (int r = 1; r <= m; ++r) {
    // c = C(a, b) with a = k - r - 2 (one less for the second identity, which
    // also carries the factor k - r - 2). On this range a >= b throughout.
    const long b = r - 1;
    long a = r - (which == 2 ? 1 : 0);
    BigInt c = binomial(a, b);
    for (int k = 2 * r + 2; k <= n - 1; ++k) {
      BigInt term = BigInt(n - k) * c;
      if (which == 2) term *= (k - r - 2);
      if (which == 3 && (k - 1) % 2 != 0) term = -term;
      out.lhs += term;
      // C(a + 1, b) = C(a, b) * (a + 1) / (a + 1 - b)
      c *= (a + 1);
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(a + 1 - b));
      ++a;
    }
  }

  switch (which) {
    case 1:
      out.rhs = fib(n) - 1 - quarter_sq;
      break;
    case 2:
      out.rhs = total_capacity(n);
      break;
    default:
      out.rhs = BigInt(2L * n - 5 - quarter_sq) + sign_power(n) * fib(n - 6);
      break;
  }
  return out;
}

}  // namespace capdist
