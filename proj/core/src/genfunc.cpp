#include "capdist/genfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace capdist {

namespace {

using std::size_t;

// Divides `num` by each denominator in turn.
XSeries divide_all(XSeries num, std::initializer_list<XSeries> dens) {
  for (const auto& d : dens) num = rational_series(num, d);
  return num;
}

XSeries poly_in_x(size_t order, std::initializer_list<TriPoly> coeffs) {
  return XSeries(order, coeffs);
}

// 1 - c x
XSeries one_minus(size_t order, const TriPoly& c) { return poly_in_x(order, {1, -c}); }

}  // namespace

XSeries gf_wk(int k, size_t order) {
  if (k < 1) throw std::invalid_argument("gf_wk requires k >= 1");
  XSeries s = XSeries::x_power(order, static_cast<size_t>(k) + 4);
  const XSeries one_minus_x = one_minus(order, 1);
  const XSeries one_minus_x2 = poly_in_x(order, {1, 0, -1});
  s = divide_all(std::move(s), {one_minus_x, one_minus_x});
  for (int i = 0; i <= k; ++i) s = rational_series(s, one_minus_x2);
  return s;
}

XSeries gf_w0(size_t order) {
  const XSeries num = poly_in_x(order, {1, -1, 0, 1});
  const XSeries one_minus_x = one_minus(order, 1);
  return divide_all(num, {one_minus_x, one_minus_x, poly_in_x(order, {1, 0, -1})});
}

XSeries gf_F(size_t order) {
  const TriPoly y = TriPoly::y();
  const XSeries num = poly_in_x(order, {1, -(1 + y), y, 1 - y});
  const XSeries one_minus_x = one_minus(order, 1);
  return divide_all(num, {one_minus_x, one_minus_x, poly_in_x(order, {1, -y, -1})});
}

XSeries gf_F_at_minus_one(size_t order) {
  const XSeries num = poly_in_x(order, {1, 0, -1, 2});
  const XSeries one_minus_x = one_minus(order, 1);
  return divide_all(num, {one_minus_x, one_minus_x, poly_in_x(order, {1, 1, -1})});
}

XSeries gf_d(size_t order) {
  return rational_series(poly_in_x(order, {1, 0, -1, 1}), poly_in_x(order, {1, -1, -2, 2}));
}

XSeries gf_Fpq(size_t order) {
  const TriPoly p = TriPoly::p();
  XSeries sum = XSeries::one(order);
  for (size_t n = 1; 2 * n <= order; ++n) {
    const auto un = static_cast<std::uint32_t>(n);
    XSeries term = XSeries::x_power(order, 2 * n, TriPoly::q(un * un));
    term = rational_series(term, one_minus(order, TriPoly::monomial(1, {0, 1, un})));
    for (std::uint32_t j = 1; j < un; ++j) {
      term = rational_series(term, one_minus(order, TriPoly::monomial(1, {1, 1, j})));
    }
    sum += term;
  }
  return rational_series(sum, one_minus(order, p));
}

XSeries gf_Fp1(size_t order) {
  const TriPoly y = TriPoly::y();
  const TriPoly p = TriPoly::p();
  const XSeries num = poly_in_x(order, {1, -(p * (1 + y)), p * p * y, p * (1 - y)});
  const XSeries one_minus_px = one_minus(order, p);
  return divide_all(num, {one_minus_px, one_minus_px, poly_in_x(order, {1, -(p * y), -1})});
}

XSeries gf_totcap(bool p_symbolic, size_t order) {
  const TriPoly p = p_symbolic ? TriPoly::p() : TriPoly(1);
  const XSeries num = XSeries::x_power(order, 5, p);
  const XSeries one_minus_px = one_minus(order, p);
  const XSeries fib_den = poly_in_x(order, {1, -p, -1});
  return divide_all(num, {one_minus_px, one_minus_px, fib_den, fib_den});
}

XSeries f2_from_fpq(const XSeries& fpq) {
  XSeries f2 = fpq * one_minus(fpq.order(), TriPoly::p());
  f2[0] -= 1;
  return f2;
}

XSeries f2_functional_residual(const XSeries& f2) {
  const size_t order = f2.order();
  const TriPoly pq = TriPoly::monomial(1, {0, 1, 1});
  const TriPoly pqy = TriPoly::monomial(1, {1, 1, 1});
  const XSeries qx2 = XSeries::x_power(order, 2, TriPoly::q());
  const XSeries first = rational_series(qx2, one_minus(order, pq));
  const XSeries second = rational_series(qx2, one_minus(order, pqy)) * substitute_qx(f2);
  return f2 - first - second;
}

bool f2_functional_check(const XSeries& f2) {
  const XSeries residual = f2_functional_residual(f2);
  return std::all_of(residual.coefficients().begin(), residual.coefficients().end(),
                     [](const TriPoly& c) { return c.is_zero(); });
}

bool f2_functional_check(size_t order) { return f2_functional_check(f2_from_fpq(gf_Fpq(order))); }

const std::vector<GfModel>& gf_registry() {
  static const std::vector<GfModel> models = {
      {"gf.w0", "(1-x+x^3)/((1-x)^2 (1-x^2))", false,
       [](const GfParams& g) { return gf_w0(g.order); }},
      {"gf.wk", "x^(k+4)/((1-x)^2 (1-x^2)^(k+1))", true,
       [](const GfParams& g) { return gf_wk(g.k, g.order); }},
      {"gf.F", "(1-x(1+y)+x^2 y+x^3 (1-y))/((1-x)^2 (1-xy-x^2))", false,
       [](const GfParams& g) { return gf_F(g.order); }},
      {"gf.d", "(1-x^2+x^3)/(1-x-2x^2+2x^3)", false,
       [](const GfParams& g) { return gf_d(g.order); }},
      {"gf.Fpq", "1/(1-px) + sum_n q^(n^2) x^(2n)/((1-px)(1-pq^n x) prod_{j<n} (1-pq^j xy))", false,
       [](const GfParams& g) { return gf_Fpq(g.order); }},
      {"gf.Fp1", "(1-px(1+y)+p^2 x^2 y+px^3 (1-y))/((1-px)^2 (1-pxy-x^2))", false,
       [](const GfParams& g) { return gf_Fp1(g.order); }},
      {"gf.totcap", "x^5/((1-x)^2 (1-x-x^2)^2), or px^5/((1-px)^2 (1-px-x^2)^2) with --p-symbolic",
       false, [](const GfParams& g) { return gf_totcap(g.p_symbolic, g.order); }},
      {"gf.F2check", "F2(x) - qx^2/(1-pqx) - qx^2/(1-pqxy) F2(qx), expected identically 0", false,
       [](const GfParams& g) { return f2_functional_residual(f2_from_fpq(gf_Fpq(g.order))); }},
  };
  return models;
}

const GfModel* find_gf_model(std::string_view name) {
  for (const auto& m : gf_registry()) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

}  // namespace capdist
