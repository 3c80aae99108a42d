#include "zfr/rootfind.hpp"

namespace zfr {

Real bracket_bisect(const RealFn& f, const Real& a, const Real& b, int scan_steps,
                    const Real& bisect_tol, const Real& endpoint_tol) {
  Real step = (b - a) / scan_steps;
  Real x0 = a;
  Real f0 = f(x0);
  Real lo, hi;
  bool found = false;
  for (int i = 1; i <= scan_steps; ++i) {
    Real x1 = (i == scan_steps) ? b : a + step * i;
    Real f1 = f(x1);
    if (f0 == 0) return x0;
    if (f0 * f1 <= 0) {
      lo = x0;
      hi = x1;
      found = true;
      break;
    }
    x0 = x1;
    f0 = f1;
  }
  if (!found) {
    if (abs(f(b)) <= endpoint_tol) return b;
    if (abs(f(a)) <= endpoint_tol) return a;
    throw NoRootError("no sign change on the scanned interval");
  }
  Real flo = f(lo);
  while (hi - lo > bisect_tol) {
    Real mid = (lo + hi) / 2;
    Real fm = f(mid);
    if (fm == 0) return mid;
    if (flo * fm < 0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return (lo + hi) / 2;
}

Real newton_polish(const RealFn& f, const RealFn& df, Real x0, Real lo, Real hi,
                   int iters) {
  Real x = x0;
  for (int i = 0; i < iters; ++i) {
    Real d = df(x);
    if (d == 0) break;
    Real xn = x - f(x) / d;
    if (xn < lo || xn > hi) xn = (lo + hi) / 2;
    if (xn == x) break;
    x = xn;
  }
  return x;
}

std::pair<Real, Real> golden_min(const RealFn& f, Real a, Real b, int iters) {
  const Real invphi = (sqrt(Real(5)) - 1) / 2;
  Real c = b - invphi * (b - a);
  Real d = a + invphi * (b - a);
  Real fc = f(c), fd = f(d);
  for (int i = 0; i < iters; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  Real x = (a + b) / 2;
  return {x, f(x)};
}

}  // namespace zfr
