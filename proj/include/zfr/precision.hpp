#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace zfr {

// All numeric work runs on MPFR reals whose precision is set once per
// invocation (default 60 significant decimal digits).  Expression templates
// are disabled so Real behaves like a plain value type.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

inline constexpr int kDefaultDigits = 60;

int working_digits();
void set_working_digits(int digits);

// 10^{-(working_digits - guard)}; the round-off envelope used in reports.
Real roundoff_envelope(int guard = 8);

Real pi();
Real euler_gamma();

Real to_real(const Rational& q);

// Parses a height argument: either plain decimal ("545000000", "1e300") or
// the form "eN" meaning e^N ("e54550"), which avoids overflowing decimal
// notation for the heights used by the asymptotic pipelines.
Real parse_height(const std::string& text);

// Restores the previous precision on scope exit.
struct ScopedDigits {
  explicit ScopedDigits(int digits) : saved_(working_digits()) { set_working_digits(digits); }
  ~ScopedDigits() { set_working_digits(saved_); }
  ScopedDigits(const ScopedDigits&) = delete;
  ScopedDigits& operator=(const ScopedDigits&) = delete;

 private:
  int saved_;
};

}  // namespace zfr
