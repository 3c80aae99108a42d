#pragma once

#include <vector>

#include "zfr/bernoulli.hpp"
#include "zfr/precision.hpp"

namespace zfr {

// Minimal arbitrary-precision complex type.  std::complex is not usable with
// a multiprecision backend, and the handful of transcendental functions the
// toolkit needs are cheap to express through the MPFR real functions.
struct Cplx {
  Real re{};
  Real im{};

  Cplx() = default;
  Cplx(Real r) : re(std::move(r)) {}
  Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Cplx(int r) : re(r) {}
  Cplx(double r) : re(r) {}

  Cplx& operator+=(const Cplx& o) { re += o.re; im += o.im; return *this; }
  Cplx& operator-=(const Cplx& o) { re -= o.re; im -= o.im; return *this; }
  Cplx& operator*=(const Cplx& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
};

inline Cplx operator+(Cplx a, const Cplx& b) { return a += b; }
inline Cplx operator-(Cplx a, const Cplx& b) { return a -= b; }
inline Cplx operator-(const Cplx& a) { return {-a.re, -a.im}; }
inline Cplx operator*(Cplx a, const Cplx& b) { return a *= b; }
inline Cplx operator*(const Real& s, Cplx a) { a.re *= s; a.im *= s; return a; }
inline Cplx operator*(Cplx a, const Real& s) { a.re *= s; a.im *= s; return a; }

inline Cplx conj(const Cplx& z) { return {z.re, -z.im}; }
inline Real norm_sq(const Cplx& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Cplx& z) { return hypot(z.re, z.im); }
inline Real arg(const Cplx& z) { return atan2(z.im, z.re); }

inline Cplx inv(const Cplx& z) {
  Real d = norm_sq(z);
  return {z.re / d, -z.im / d};
}

inline Cplx operator/(const Cplx& a, const Cplx& b) { return a * inv(b); }
inline Cplx operator/(const Cplx& a, const Real& s) { return {a.re / s, a.im / s}; }

inline bool operator==(const Cplx& a, const Cplx& b) { return a.re == b.re && a.im == b.im; }

inline Cplx exp(const Cplx& z) {
  Real m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

inline Cplx log(const Cplx& z) { return {log(abs(z)), arg(z)}; }

inline Cplx sin(const Cplx& z) {
  return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

inline Cplx cos(const Cplx& z) {
  return {cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im)};
}

inline Cplx cot(const Cplx& z) { return cos(z) / sin(z); }

// pow for a positive real base and complex exponent: b^z = exp(z log b).
inline Cplx pow_cplx(const Real& base, const Cplx& z) {
  return exp(z * log(base));
}

inline Cplx pow_int(Cplx z, unsigned n) {
  Cplx r(Real(1));
  while (n) {
    if (n & 1u) r *= z;
    z *= z;
    n >>= 1;
  }
  return r;
}

// Coefficients a_n of cot z - 1/z = sum_{n>=1} a_n z^{2n-1},
// a_n = (-4)^n B_{2n} / (2n)!.  Enough terms for |z| <= 0.55 at the current
// precision; rebuilt when the working precision changes.
inline const std::vector<Real>& cot_series_coeffs() {
  static int cached_digits = -1;
  static std::vector<Real> coeffs;
  if (cached_digits != working_digits()) {
    cached_digits = working_digits();
    unsigned terms = static_cast<unsigned>(cached_digits / 1.5) + 12;
    auto bf = bernoulli_over_factorial(terms);  // B_{2k}/(2k)!
    coeffs.clear();
    coeffs.reserve(terms);
    Real four_n(1);
    for (unsigned n = 1; n <= terms; ++n) {
      four_n *= -4;
      coeffs.push_back(four_n * bf[n - 1]);
    }
  }
  return coeffs;
}

// cot z - 1/z with the removable singularity at z = 0 handled by the series.
inline Cplx cot_minus_inv(const Cplx& z) {
  if (abs(z) < Real("0.55")) {
    const auto& a = cot_series_coeffs();
    Cplx z2 = z * z;
    Cplx term = z;
    Cplx sum(Real(0));
    Real eps = roundoff_envelope(4);
    for (const Real& an : a) {
      Cplx t = an * term;
      sum += t;
      if (abs(t) < eps * (abs(sum) + eps)) break;
      term *= z2;
    }
    return sum;
  }
  return cot(z) - inv(z);
}

inline Real cot_minus_inv(const Real& x) {
  if (abs(x) < Real("0.55")) {
    const auto& a = cot_series_coeffs();
    Real x2 = x * x;
    Real term = x;
    Real sum(0);
    Real eps = roundoff_envelope(4);
    for (const Real& an : a) {
      Real t = an * term;
      sum += t;
      if (abs(t) < eps * (abs(sum) + eps)) break;
      term *= x2;
    }
    return sum;
  }
  return cos(x) / sin(x) - 1 / x;
}

}  // namespace zfr
