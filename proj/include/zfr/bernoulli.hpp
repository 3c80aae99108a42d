#pragma once

#include <cstddef>
#include <vector>

#include "zfr/precision.hpp"

namespace zfr {

// Exact Bernoulli numbers B_0..B_n (B_1 = -1/2 convention), computed once via
// the binomial recurrence and cached.
const std::vector<Rational>& bernoulli_rationals(std::size_t n_max);

// B_{2k} as a Real at the current working precision.
Real bernoulli_b2k(unsigned k);

// B_{2k} / (2k)! for k = 1..count, at the current working precision.
std::vector<Real> bernoulli_over_factorial(unsigned count);

}  // namespace zfr
