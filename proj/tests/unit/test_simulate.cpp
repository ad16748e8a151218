#include <doctest.h>

#include <cmath>

#include "infothresh/curve.hpp"
#include "infothresh/simulate.hpp"

using namespace infothresh;

namespace {

double binomial_se(double p, double m) {
  return std::sqrt(p * (1.0 - p) / m);
}

}  // namespace

TEST_SUITE("simulate") {

TEST_CASE("perfect classifier has unit ppv") {
  const SimulationReport report = simulate_confusion(
      ClassifierRates(1.0, 1.0), Probability(0.3), 10000, 1);
  CHECK(report.empirical_ppv.value() == 1.0);
  CHECK(report.counts.fp == 0);
  CHECK(report.counts.fn == 0);
  CHECK(report.generator == "mt19937_64");
}

TEST_CASE("empirical ppv tracks the analytic posterior") {
  const ClassifierRates rates(0.95, 0.99);
  const Probability prevalence(0.093);
  const double analytic = posterior(rates, prevalence).value();

  const SimulationReport report =
      simulate_confusion(rates, prevalence, 1000000, 12345);
  const double flagged =
      static_cast<double>(report.counts.tp + report.counts.fp);
  REQUIRE(flagged > 0.0);
  const double se = binomial_se(analytic, flagged);
  CHECK(std::abs(report.empirical_ppv.value() - analytic) < 3.0 * se);

  // Empirical rates should sit near their inputs too.
  CHECK(std::abs(report.empirical_tpr.value() - 0.95) < 0.005);
  CHECK(std::abs(report.empirical_tnr.value() - 0.99) < 0.005);
}

TEST_CASE("uninformative classifier returns the prevalence") {
  const SimulationReport report = simulate_confusion(
      ClassifierRates(0.5, 0.5), Probability(0.25), 1000000, 99);
  const double flagged =
      static_cast<double>(report.counts.tp + report.counts.fp);
  const double se = binomial_se(0.25, flagged);
  CHECK(std::abs(report.empirical_ppv.value() - 0.25) < 3.0 * se);
}

TEST_CASE("identical seeds are bit-identical") {
  const ClassifierRates rates(0.8, 0.7);
  const SimulationReport first =
      simulate_confusion(rates, Probability(0.4), 50000, 777);
  const SimulationReport second =
      simulate_confusion(rates, Probability(0.4), 50000, 777);
  CHECK(first.counts.tp == second.counts.tp);
  CHECK(first.counts.fp == second.counts.fp);
  CHECK(first.counts.fn == second.counts.fn);
  CHECK(first.counts.tn == second.counts.tn);
  CHECK(first.empirical_ppv.value() == second.empirical_ppv.value());
  CHECK(first.empirical_tpr.value() == second.empirical_tpr.value());
  CHECK(first.empirical_tnr.value() == second.empirical_tnr.value());

  const SimulationReport other =
      simulate_confusion(rates, Probability(0.4), 50000, 778);
  CHECK(first.counts.tp != other.counts.tp);
}

TEST_CASE("degenerate tallies fall back instead of dividing by zero") {
  // Prevalence 0 with tnr = 1: nothing is ever flagged.
  const SimulationReport report = simulate_confusion(
      ClassifierRates(0.9, 1.0), Probability(0.0), 1000, 5);
  CHECK(report.counts.tp + report.counts.fp == 0);
  CHECK(report.empirical_ppv.value() == 0.0);
  CHECK(report.empirical_tpr.value() == 0.9);
  CHECK(report.empirical_tnr.value() == 1.0);

  CHECK_THROWS_AS(
      simulate_confusion(ClassifierRates(0.9, 0.9), Probability(0.5), 0, 1),
      DomainError);
}

}  // TEST_SUITE
