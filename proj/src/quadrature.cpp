#include "zfr/quadrature.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace zfr {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<Real, Real> legendre(int n, const Real& x) {
  Real p0(1), p1 = x;
  for (int k = 2; k <= n; ++k) {
    Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  Real dp = n * (x * p1 - p0) / (x * x - 1);
  return {p1, dp};
}

}  // namespace

GaussLegendre::GaussLegendre(int n) {
  if (n < 2) throw std::invalid_argument("GaussLegendre order must be >= 2");
  node.resize(n);
  weight.resize(n);
  Real tol = roundoff_envelope(4);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev initial guess, then Newton at full precision.
    Real x(std::cos(M_PI * (i + 0.75) / (n + 0.5)));
    Real dp(1);
    for (int it = 0; it < 80; ++it) {
      auto [p, d] = legendre(n, x);
      dp = d;
      Real dx = p / d;
      x -= dx;
      if (abs(dx) < tol) {
        auto [p2, d2] = legendre(n, x);
        dp = d2;
        x -= p2 / d2;
        break;
      }
    }
    Real w = 2 / ((1 - x * x) * dp * dp);
    node[i] = -x;
    weight[i] = w;
    node[n - 1 - i] = x;
    weight[n - 1 - i] = w;
  }
  if (n % 2 == 1) {
    node[n / 2] = 0;
    auto [p, d] = legendre(n, Real(0));
    weight[n / 2] = 2 / (d * d);
  }
}

const GaussLegendre& gl_rule(int n) {
  static std::map<int, GaussLegendre> cache;
  static int cached_digits = -1;
  if (cached_digits != working_digits()) {
    cache.clear();
    cached_digits = working_digits();
  }
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, GaussLegendre(n)).first;
  }
  return it->second;
}

}  // namespace zfr
