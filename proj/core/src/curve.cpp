#include "infothresh/curve.hpp"

#include <cmath>
#include <cstdint>
#include <string>

namespace infothresh {

namespace {

// Denominator of the positive update, D(phi) = a*phi + c*(1 - phi).
double positive_denominator(const ClassifierRates& rates, double phi) {
  return rates.tpr() * phi + rates.fall_out() * (1.0 - phi);
}

void require_nonzero(double denominator, const char* where) {
  if (denominator <= 0.0) {
    throw DomainError(std::string(where) +
                      ": denominator vanishes, posterior undefined");
  }
}

}  // namespace

Probability posterior(const ClassifierRates& rates, Probability prior) {
  const double phi = prior.value();
  const double numerator = rates.tpr() * phi;
  const double denominator = positive_denominator(rates, phi);
  require_nonzero(denominator, "posterior");
  return Probability(numerator / denominator);
}

Probability negative_posterior(const ClassifierRates& rates, Probability prior) {
  const double phi = prior.value();
  const double numerator = (1.0 - rates.tpr()) * phi;
  const double denominator = numerator + rates.tnr() * (1.0 - phi);
  require_nonzero(denominator, "negative_posterior");
  return Probability(numerator / denominator);
}

double posterior_derivative(const ClassifierRates& rates, Probability prior) {
  const double d = positive_denominator(rates, prior.value());
  require_nonzero(d, "posterior_derivative");
  const double ac = rates.tpr() * rates.fall_out();
  return ac / (d * d);
}

double posterior_second_derivative(const ClassifierRates& rates,
                                   Probability prior) {
  const double d = positive_denominator(rates, prior.value());
  require_nonzero(d, "posterior_second_derivative");
  const double ac = rates.tpr() * rates.fall_out();
  const double j = youden_j(rates);
  return -2.0 * ac * j / (d * d * d);
}

double curvature(const ClassifierRates& rates, Probability prior) {
  const double d1 = posterior_derivative(rates, prior);
  const double d2 = posterior_second_derivative(rates, prior);
  return std::abs(d2) / std::pow(1.0 + d1 * d1, 1.5);
}

CurveSample sample_curve(const ClassifierRates& rates, double step) {
  if (!(step > 0.0) || step > 0.5) {
    throw DomainError("sample_curve: step must be in (0, 0.5]");
  }
  const auto n = static_cast<std::uint64_t>(std::llround(1.0 / step));
  if (std::abs(static_cast<double>(n) * step - 1.0) > 1e-9) {
    throw DomainError("sample_curve: step must divide the unit interval");
  }

  CurveSample sample{rates, {}, step};
  sample.points.reserve(n + 1);
  for (std::uint64_t i = 0; i <= n; ++i) {
    const Probability phi(static_cast<double>(i) / static_cast<double>(n));
    sample.points.push_back({phi, posterior(rates, phi)});
  }
  return sample;
}

}  // namespace infothresh
