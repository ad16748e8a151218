#pragma once

#include <vector>

#include "infothresh/types.hpp"

namespace infothresh {

// The prior-to-posterior curve of a binary classifier and its local
// geometry. With a = tpr, b = tnr, c = 1 - b and prior phi, a positive
// classification updates belief to
//
//     rho(phi) = a*phi / (a*phi + c*(1 - phi))
//
// whose denominator we write D(phi) = c + (a + b - 1)*phi.

// Posterior belief after a positive outcome. Throws DomainError when
// the denominator vanishes (a*phi = 0 and c*(1-phi) = 0 simultaneously).
Probability posterior(const ClassifierRates& rates, Probability prior);

// Posterior belief after a negative outcome:
//   (1-a)*phi / ((1-a)*phi + b*(1-phi)).
// Throws DomainError on a vanishing denominator.
Probability negative_posterior(const ClassifierRates& rates, Probability prior);

// d(rho)/d(phi) = a*c / D(phi)^2. Strictly positive when a > 0, b < 1.
double posterior_derivative(const ClassifierRates& rates, Probability prior);

// d2(rho)/d(phi)^2 = -2*a*c*(a + b - 1) / D(phi)^3. Its sign is constant
// on (0,1): negative above the identity line (a+b > 1), zero on it,
// positive below.
double posterior_second_derivative(const ClassifierRates& rates,
                                   Probability prior);

// Curvature kappa = |rho''| / (1 + rho'^2)^(3/2). Identically zero iff
// a + b = 1.
double curvature(const ClassifierRates& rates, Probability prior);

struct CurvePoint {
  Probability phi;
  Probability rho;
};

// A uniform sampling of the curve over [0,1], endpoints included.
struct CurveSample {
  ClassifierRates rates;
  std::vector<CurvePoint> points;
  double step;
};

// Samples the curve at phi = 0, step, 2*step, ..., 1. The step must
// divide 1 (within 1e-9) and lie in (0, 0.5]. Throws DomainError
// otherwise, or when any sample point has an undefined posterior.
CurveSample sample_curve(const ClassifierRates& rates, double step);

}  // namespace infothresh
