#pragma once

#include <functional>
#include <stdexcept>
#include <utility>

#include "zfr/precision.hpp"

namespace zfr {

struct NoRootError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using RealFn = std::function<Real(const Real&)>;

// Scans [a, b] in `scan_steps` equal steps for a sign change (endpoints
// included), bisects the bracket down to `bisect_tol`, then returns the
// midpoint.  Throws NoRootError when no sign change is found and neither
// endpoint is a root to within `endpoint_tol`.
Real bracket_bisect(const RealFn& f, const Real& a, const Real& b, int scan_steps,
                    const Real& bisect_tol, const Real& endpoint_tol);

// Newton iteration started from x0, falling back to the supplied bracket when
// a step leaves it.
Real newton_polish(const RealFn& f, const RealFn& df, Real x0, Real lo, Real hi,
                   int iters);

// Golden-section minimization; returns (argmin, min value).  Deterministic
// for fixed inputs.
std::pair<Real, Real> golden_min(const RealFn& f, Real a, Real b, int iters);

}  // namespace zfr
