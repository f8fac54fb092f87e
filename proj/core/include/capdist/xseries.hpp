#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "capdist/tripoly.hpp"

namespace capdist {

inline constexpr std::size_t kDefaultOrder = 64;

/// Thrown when a series inversion is requested for a non-unit constant term.
class NonUnitConstantError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Power series in x truncated after x^order, with TriPoly coefficients.
///
/// Arithmetic between series of different order truncates to the smaller one.
class XSeries {
 public:
  explicit XSeries(std::size_t order = kDefaultOrder) : coeffs_(order + 1) {}

  /// Series whose leading coefficients are `coeffs` (x^0 first); the rest are zero.
  XSeries(std::size_t order, std::initializer_list<TriPoly> coeffs);

  static XSeries one(std::size_t order) { return XSeries(order, {TriPoly(1)}); }
  /// coef * x^power (zero when power exceeds the order).
  static XSeries x_power(std::size_t order, std::size_t power, const TriPoly& coef = 1);

  std::size_t order() const { return coeffs_.size() - 1; }
  const TriPoly& operator[](std::size_t n) const { return coeffs_.at(n); }
  TriPoly& operator[](std::size_t n) { return coeffs_.at(n); }
  const std::vector<TriPoly>& coefficients() const { return coeffs_; }

  XSeries truncated(std::size_t order) const;

  XSeries& operator+=(const XSeries& rhs);
  XSeries& operator-=(const XSeries& rhs);
  /// Multiplies every coefficient by a polynomial constant in x.
  XSeries& operator*=(const TriPoly& scalar);

  friend XSeries operator+(const XSeries& a, const XSeries& b);
  friend XSeries operator-(const XSeries& a, const XSeries& b);
  friend XSeries operator*(const XSeries& a, const XSeries& b);
  friend XSeries operator*(XSeries a, const TriPoly& s) { return a *= s; }
  friend bool operator==(const XSeries& a, const XSeries& b) { return a.coeffs_ == b.coeffs_; }

  /// Applies `fn` to every coefficient.
  template <class Fn>
  XSeries map(Fn&& fn) const {
    XSeries out(order());
    for (std::size_t n = 0; n <= order(); ++n) out.coeffs_[n] = fn(coeffs_[n]);
    return out;
  }

 private:
  std::vector<TriPoly> coeffs_;
};

XSeries series_add(const XSeries& a, const XSeries& b);
XSeries series_mul(const XSeries& a, const XSeries& b);

/// Multiplicative inverse modulo x^(order+1). The constant term must be +1 or -1.
XSeries series_invert(const XSeries& a);

/// numerator / denominator by coefficient recurrence; same contract as series_invert.
/// Zero denominator coefficients are skipped, so sparse denominators are cheap.
XSeries rational_series(const XSeries& numerator, const XSeries& denominator);

/// Replaces x with q*x: coefficient n is multiplied by q^n.
XSeries substitute_qx(const XSeries& a);

}  // namespace capdist
