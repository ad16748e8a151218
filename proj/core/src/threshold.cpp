#include "infothresh/threshold.hpp"

#include <cmath>
#include <limits>

namespace infothresh {

ThresholdPoint information_threshold(const ClassifierRates& rates) {
  const double a = rates.tpr();
  const double c = rates.fall_out();

  if (a == 0.0 && c == 0.0) {
    throw DomainError(
        "information_threshold: undefined threshold for tpr = 0, tnr = 1 "
        "(no curve exists)");
  }
  // Degenerate but one-sidedly informative classifiers: the curve
  // collapses onto a step and the threshold point is reached only in
  // the limit, with unbounded curvature.
  if (c == 0.0) {
    return {Probability(0.0), Probability(1.0),
            std::numeric_limits<double>::infinity(), true};
  }
  if (a == 0.0) {
    return {Probability(1.0), Probability(0.0),
            std::numeric_limits<double>::infinity(), true};
  }

  const double sqrt_a = std::sqrt(a);
  const double sqrt_c = std::sqrt(c);
  const Probability phi_e(sqrt_c / (sqrt_a + sqrt_c));
  return {phi_e, posterior(rates, phi_e), curvature(rates, phi_e), false};
}

}  // namespace infothresh
