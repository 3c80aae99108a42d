#pragma once

#include <utility>
#include <vector>

#include "zfr/complexmath.hpp"
#include "zfr/precision.hpp"

namespace zfr {

// Gauss-Legendre rule on [-1, 1], nodes ascending, computed at the current
// working precision.
struct GaussLegendre {
  explicit GaussLegendre(int n);
  std::vector<Real> node;
  std::vector<Real> weight;
};

// Cached rule; rebuilt when the working precision changes.
const GaussLegendre& gl_rule(int n);

template <class F>
auto integrate_panel(F&& f, const Real& a, const Real& b, const GaussLegendre& gl) {
  Real mid = (a + b) / 2;
  Real half = (b - a) / 2;
  using V = decltype(f(mid));
  V sum{};
  for (std::size_t i = 0; i < gl.node.size(); ++i) {
    sum += gl.weight[i] * f(mid + half * gl.node[i]);
  }
  return half * sum;
}

// Fixed composite rule: deterministic, no refinement.  Used where the
// integrand is known-smooth and a frozen node set is wanted.
template <class F>
auto integrate_composite(F&& f, const Real& a, const Real& b, int panels, int order = 24) {
  const GaussLegendre& gl = gl_rule(order);
  Real width = (b - a) / panels;
  using V = decltype(f(a));
  V sum{};
  for (int p = 0; p < panels; ++p) {
    Real pa = a + width * p;
    Real pb = (p + 1 == panels) ? b : a + width * (p + 1);
    sum += integrate_panel(f, pa, pb, gl);
  }
  return sum;
}

namespace detail {

template <class F, class V>
void integrate_adaptive(F& f, const Real& a, const Real& b, const Real& tol,
                        const GaussLegendre& gl, int depth, V& acc) {
  V whole = integrate_panel(f, a, b, gl);
  Real mid = (a + b) / 2;
  V left = integrate_panel(f, a, mid, gl);
  V right = integrate_panel(f, mid, b, gl);
  Real err = abs(left + right - whole);
  if (err <= tol || depth <= 0) {
    acc += left + right;
    return;
  }
  Real half_tol = tol / 2;
  integrate_adaptive(f, a, mid, half_tol, gl, depth - 1, acc);
  integrate_adaptive(f, mid, b, half_tol, gl, depth - 1, acc);
}

}  // namespace detail

// Adaptive bisection with a GL(order) base rule.  Splits left-to-right, so
// results are independent of evaluation scheduling.
template <class F>
auto integrate(F&& f, const Real& a, const Real& b, const Real& abs_tol,
               int max_depth = 48, int order = 24) {
  const GaussLegendre& gl = gl_rule(order);
  using V = decltype(f(a));
  V acc{};
  detail::integrate_adaptive(f, a, b, abs_tol, gl, max_depth, acc);
  return acc;
}

}  // namespace zfr
