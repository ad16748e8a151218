#pragma once

#include "infothresh/curve.hpp"
#include "infothresh/types.hpp"

namespace infothresh {

// The information threshold of a classifier: the prior phi_e at which
// the curvature of the prior-to-posterior curve is maximal. Closed form
//
//     phi_e = sqrt(c) / (sqrt(a) + sqrt(c)),   c = 1 - b,
//
// and the threshold point always satisfies phi_e + rho(phi_e) = 1.
struct ThresholdPoint {
  Probability phi_e;
  Probability rho_e;
  double kappa_max = 0.0;  // curvature at phi_e; 0 on the identity line
  bool limit_case = false;  // true for the degenerate endpoints below
};

// Computes the threshold point. Degenerate rates:
//   b = 1, a > 0: limiting point (0, 1), flagged, kappa_max = +inf
//   a = 0, b < 1: limiting point (1, 0), flagged, kappa_max = +inf
//   a = 0, b = 1: DomainError, the formula is 0/0 and no curve exists
ThresholdPoint information_threshold(const ClassifierRates& rates);

}  // namespace infothresh
