#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "capdist/xseries.hpp"

namespace capdist {

// Generating functions in x, expanded to the requested truncation order.
// Coefficients are polynomials in y (capacity), p (parts equal to 1) and
// q (sigma) as appropriate.

/// x^{k+4} / ((1-x)^2 (1-x^2)^{k+1}): capacity exactly k >= 1.
XSeries gf_wk(int k, std::size_t order);

/// (1 - x + x^3) / ((1-x)^2 (1-x^2)): capacity zero.
XSeries gf_w0(std::size_t order);

/// (1 - x(1+y) + x^2 y + x^3 (1-y)) / ((1-x)^2 (1 - xy - x^2)).
XSeries gf_F(std::size_t order);

/// (1 - x^2 + 2x^3) / ((1-x)^2 (1 + x - x^2)), the y = -1 specialization in closed rational form.
XSeries gf_F_at_minus_one(std::size_t order);

/// (1 - x^2 + x^3) / (1 - x - 2x^2 + 2x^3): compositions with even internal parts.
XSeries gf_d(std::size_t order);

/// 1/(1-px) + sum_{n>=1} q^{n^2} x^{2n} / ((1-px)(1-pq^n x) prod_{j<n} (1 - p q^j x y)).
/// Summands with 2n > order vanish at this truncation and are skipped.
XSeries gf_Fpq(std::size_t order);

/// (1 - px(1+y) + p^2 x^2 y + p x^3 (1-y)) / ((1-px)^2 (1 - pxy - x^2)).
XSeries gf_Fp1(std::size_t order);

/// x^5 / ((1-x)^2 (1-x-x^2)^2), or p x^5 / ((1-px)^2 (1-px-x^2)^2) when p is symbolic.
XSeries gf_totcap(bool p_symbolic, std::size_t order);

/// Members ending in 2: (1 - px) F(x,y;p,q) - 1.
XSeries f2_from_fpq(const XSeries& fpq);

/// F2(x) - q x^2/(1 - pqx) - q x^2/(1 - pqxy) F2(qx); identically zero for the true F2.
XSeries f2_functional_residual(const XSeries& f2);

/// True when the residual of `f2` vanishes through its order.
bool f2_functional_check(const XSeries& f2);

/// Builds gf_Fpq to `order` and checks its ending-in-2 part.
bool f2_functional_check(std::size_t order);

struct GfParams {
  std::size_t order = kDefaultOrder;
  int k = 1;                 // only gf.wk
  bool p_symbolic = false;   // only gf.totcap
};

/// Named entry in the generating-function registry.
struct GfModel {
  std::string name;
  std::string formula;
  bool needs_k = false;
  std::function<XSeries(const GfParams&)> build;
};

/// All registered models, in a fixed order.
const std::vector<GfModel>& gf_registry();

/// Registry lookup; nullptr when the name is unknown.
const GfModel* find_gf_model(std::string_view name);

}  // namespace capdist
