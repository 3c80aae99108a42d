#include "zfr/precision.hpp"

#include <boost/math/constants/constants.hpp>
#include <stdexcept>

namespace zfr {

namespace {
int g_digits = kDefaultDigits;
}

int working_digits() { return g_digits; }

void set_working_digits(int digits) {
  if (digits < 10 || digits > 10000) {
    throw std::invalid_argument("working precision must be between 10 and 10000 digits");
  }
  g_digits = digits;
  Real::default_precision(static_cast<unsigned>(digits));
}

Real roundoff_envelope(int guard) {
  Real e = pow(Real(10), -(g_digits - guard));
  return e;
}

Real pi() { return boost::math::constants::pi<Real>(); }

Real euler_gamma() { return boost::math::constants::euler<Real>(); }

Real to_real(const Rational& q) {
  return Real(numerator(q)) / Real(denominator(q));
}

Real parse_height(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty height argument");
  if (text[0] == 'e' || text[0] == 'E') {
    Real n(text.substr(1));
    return exp(n);
  }
  return Real(text);
}

namespace detail {
// Force the default precision to be applied before main() in case a caller
// never sets it explicitly.
struct PrecisionInit {
  PrecisionInit() { Real::default_precision(kDefaultDigits); }
};
const PrecisionInit g_precision_init;
}  // namespace detail

}  // namespace zfr
