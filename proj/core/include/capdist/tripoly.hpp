#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <gmpxx.h>
#include <json.hpp>

namespace capdist {

/// Arbitrary-precision signed integer used for every count in the library.
using BigInt = mpz_class;

std::string to_string(const BigInt& value);

/// Exponents of a monomial y^y p^p q^q.
struct Exponents {
  std::uint32_t y = 0;
  std::uint32_t p = 0;
  std::uint32_t q = 0;

  std::uint64_t total_degree() const { return std::uint64_t{y} + p + q; }
  friend bool operator==(const Exponents&, const Exponents&) = default;
};

Exponents operator+(const Exponents& a, const Exponents& b);

/// Graded lexicographic order on (y, p, q): total degree first, then y, p, q.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    if (a.y != b.y) return a.y < b.y;
    if (a.p != b.p) return a.p < b.p;
    return a.q < b.q;
  }
};

/// Sparse polynomial in y, p, q over the integers.
///
/// Zero coefficients are never stored, so two polynomials are equal exactly
/// when their term maps are equal. Iteration follows GradedLex.
class TriPoly {
 public:
  using TermMap = std::map<Exponents, BigInt, GradedLex>;

  TriPoly() = default;
  TriPoly(long constant);  // NOLINT(google-explicit-constructor): integer literals are polynomials
  explicit TriPoly(const BigInt& constant);

  static TriPoly monomial(const BigInt& coef, Exponents e);
  static TriPoly y(std::uint32_t power = 1) { return monomial(1, {power, 0, 0}); }
  static TriPoly p(std::uint32_t power = 1) { return monomial(1, {0, power, 0}); }
  static TriPoly q(std::uint32_t power = 1) { return monomial(1, {0, 0, power}); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of the given monomial (zero when absent).
  BigInt coeff(Exponents e) const;
  /// True when the polynomial is a constant (including zero).
  bool is_constant() const;
  BigInt constant_term() const { return coeff({}); }

  std::uint32_t degree_y() const;
  std::uint32_t degree_p() const;
  std::uint32_t degree_q() const;

  /// Adds coef * y^e.y p^e.p q^e.q in place.
  void add_term(Exponents e, const BigInt& coef);

  TriPoly& operator+=(const TriPoly& rhs);
  TriPoly& operator-=(const TriPoly& rhs);
  TriPoly& operator*=(const TriPoly& rhs);

  friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
  friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator-(const TriPoly& a);
  friend bool operator==(const TriPoly& a, const TriPoly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

TriPoly poly_add(const TriPoly& a, const TriPoly& b);
TriPoly poly_mul(const TriPoly& a, const TriPoly& b);
TriPoly poly_neg(const TriPoly& a);

/// Exact substitution of integers for all three variables.
BigInt poly_eval_int(const TriPoly& a, long y0, long p0, long q0);

/// Substitutes integers for any subset of the variables; the rest stay symbolic.
TriPoly specialize(const TriPoly& a, std::optional<long> y0, std::optional<long> p0,
                   std::optional<long> q0);

/// Formal derivative with respect to y.
TriPoly poly_dy(const TriPoly& a);

/// Human-readable form in canonical order, e.g. "10 + 2y + y^2".
std::string to_text(const TriPoly& a);

/// {"terms":[{"y":..,"p":..,"q":..,"coef":"decimal"}...]} in canonical order.
nlohmann::ordered_json to_json(const TriPoly& a);

}  // namespace capdist
