#pragma once

#include <cstdint>
#include <functional>
#include <limits>

#include "infothresh/types.hpp"

namespace infothresh {

// Brute-force numeric verifiers. These deliberately share no algebra
// with the closed forms they are used to check.

struct GridSearchResult {
  double arg_max = 0.0;
  double max_value = 0.0;
  double grid_step = 0.0;
  bool refined = false;  // golden-section refinement ran after the scan
};

struct QuadratureResult {
  double value = 0.0;
  std::uint64_t intervals = 0;
  double estimated_error = 0.0;  // Richardson estimate from a half-rule pass
};

// Central-difference derivative estimate of the given order (1 or 2)
// at x with step h. The stencil evaluates f at x-h, x and x+h; when
// bounds are supplied (e.g. [0,1] for curve functions) a stencil point
// outside them is a DomainError.
double finite_diff(const std::function<double(double)>& f, double x, double h,
                   int order,
                   double lo = -std::numeric_limits<double>::infinity(),
                   double hi = std::numeric_limits<double>::infinity());

// Locates the curvature maximum of the prior-to-posterior curve by a
// coarse grid scan over [0,1] followed by golden-section refinement to
// an interval width of 1e-10. grid_step must be at most 1e-3. Throws
// DomainError when a + b = 1 (curvature identically zero, nothing to
// maximize).
GridSearchResult maximize_curvature(const ClassifierRates& rates,
                                    double grid_step = 1e-3);

// Composite trapezoid estimate of the area under the curve,
// integral of rho(phi) over [0,1], with n_intervals >= 2 panels.
QuadratureResult integrate_curve(const ClassifierRates& rates,
                                 std::uint64_t n_intervals);

// Bisection on a monotone f with a sign change over [lo, hi]; returns
// the midpoint of the final bracket of width <= tol. Throws DomainError
// when f(lo) and f(hi) have the same sign.
double bisect_root(const std::function<double(double)>& f, double lo,
                   double hi, double tol = 1e-9);

}  // namespace infothresh
