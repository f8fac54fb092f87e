#include "capdist/xseries.hpp"

#include <algorithm>

namespace capdist {

XSeries::XSeries(std::size_t order, std::initializer_list<TriPoly> coeffs) : coeffs_(order + 1) {
  std::size_t n = 0;
  for (const auto& c : coeffs) {
    if (n > order) break;
    coeffs_[n++] = c;
  }
}

XSeries XSeries::x_power(std::size_t order, std::size_t power, const TriPoly& coef) {
  XSeries out(order);
  if (power <= order) out.coeffs_[power] = coef;
  return out;
}

XSeries XSeries::truncated(std::size_t order) const {
  XSeries out(order);
  for (std::size_t n = 0; n <= std::min(order, this->order()); ++n) out.coeffs_[n] = coeffs_[n];
  return out;
}

XSeries& XSeries::operator+=(const XSeries& rhs) {
  if (rhs.order() < order()) coeffs_.resize(rhs.order() + 1);
  for (std::size_t n = 0; n <= order(); ++n) coeffs_[n] += rhs.coeffs_[n];
  return *this;
}

XSeries& XSeries::operator-=(const XSeries& rhs) {
  if (rhs.order() < order()) coeffs_.resize(rhs.order() + 1);
  for (std::size_t n = 0; n <= order(); ++n) coeffs_[n] -= rhs.coeffs_[n];
  return *this;
}

XSeries& XSeries::operator*=(const TriPoly& scalar) {
  for (auto& c : coeffs_) c = c * scalar;
  return *this;
}

XSeries operator+(const XSeries& a, const XSeries& b) {
  XSeries out = a;
  return out += b;
}

XSeries operator-(const XSeries& a, const XSeries& b) {
  XSeries out = a;
  return out -= b;
}

XSeries operator*(const XSeries& a, const XSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  XSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

XSeries series_add(const XSeries& a, const XSeries& b) { return a + b; }
XSeries series_mul(const XSeries& a, const XSeries& b) { return a * b; }

XSeries rational_series(const XSeries& numerator, const XSeries& denominator) {
  const TriPoly& lead = denominator[0];
  const BigInt c0 = lead.constant_term();
  if (!lead.is_constant() || (c0 != 1 && c0 != -1)) {
    throw NonUnitConstantError("series constant term must be +1 or -1, got " + to_text(lead));
  }
  const std::size_t order = std::min(numerator.order(), denominator.order());

  std::vector<std::size_t> support;
  for (std::size_t k = 1; k <= order; ++k) {
    if (!denominator[k].is_zero()) support.push_back(k);
  }

  // r_n = c0 * (s_n - sum_{k>=1} d_k r_{n-k}), using c0^{-1} = c0.
  XSeries out(order);
  for (std::size_t n = 0; n <= order; ++n) {
    TriPoly acc = numerator[n];
    for (std::size_t k : support) {
      if (k > n) break;
      if (!out[n - k].is_zero()) acc -= denominator[k] * out[n - k];
    }
    out[n] = c0 == 1 ? std::move(acc) : -acc;
  }
  return out;
}

XSeries series_invert(const XSeries& a) { return rational_series(XSeries::one(a.order()), a); }

XSeries substitute_qx(const XSeries& a) {
  XSeries out(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) {
    out[n] = a[n] * TriPoly::q(static_cast<std::uint32_t>(n));
  }
  return out;
}

}  // namespace capdist
