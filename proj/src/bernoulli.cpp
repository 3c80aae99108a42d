#include "zfr/bernoulli.hpp"

namespace zfr {

const std::vector<Rational>& bernoulli_rationals(std::size_t n_max) {
  static std::vector<Rational> table = {Rational(1), Rational(-1, 2)};
  while (table.size() <= n_max) {
    // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
    const std::size_t m = table.size();
    Rational sum(0);
    Integer binom(1);  // C(m+1, 0)
    for (std::size_t j = 0; j < m; ++j) {
      sum += Rational(binom) * table[j];
      binom = binom * Integer(m + 1 - j) / Integer(j + 1);
    }
    table.push_back(-sum / Rational(m + 1));
  }
  return table;
}

Real bernoulli_b2k(unsigned k) {
  const auto& tab = bernoulli_rationals(2 * k);
  return to_real(tab[2 * k]);
}

std::vector<Real> bernoulli_over_factorial(unsigned count) {
  const auto& tab = bernoulli_rationals(2 * count);
  std::vector<Real> out;
  out.reserve(count);
  Integer fact(1);
  for (unsigned m = 1; m <= 2 * count; ++m) {
    fact *= m;
    if (m % 2 == 0) {
      out.push_back(to_real(tab[m] / Rational(fact)));
    }
  }
  return out;
}

}  // namespace zfr
