#include "infothresh/simulate.hpp"

#include <random>

namespace infothresh {

namespace {

// Canonical double in [0, 1) from the top 53 bits of one 64-bit draw.
// std::uniform_real_distribution is implementation-defined, which would
// break the cross-platform bit-identity contract of the report.
double canonical(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double ratio_or(double numerator, double denominator, double fallback) {
  return denominator > 0.0 ? numerator / denominator : fallback;
}

}  // namespace

SimulationReport simulate_confusion(const ClassifierRates& rates,
                                    Probability prevalence, std::uint64_t n,
                                    std::uint64_t seed) {
  if (n == 0) {
    throw DomainError("simulate_confusion: need at least one sample");
  }

  std::mt19937_64 rng(seed);
  ConfusionCounts counts;
  for (std::uint64_t i = 0; i < n; ++i) {
    const bool is_positive = canonical(rng) < prevalence.value();
    if (is_positive) {
      (canonical(rng) < rates.tpr() ? counts.tp : counts.fn) += 1;
    } else {
      (canonical(rng) < rates.tnr() ? counts.tn : counts.fp) += 1;
    }
  }

  const auto count = [](std::uint64_t v) { return static_cast<double>(v); };
  SimulationReport report;
  report.n_samples = n;
  report.prevalence = prevalence;
  report.empirical_ppv = Probability(ratio_or(
      count(counts.tp), count(counts.tp + counts.fp), prevalence.value()));
  report.empirical_tpr = Probability(ratio_or(
      count(counts.tp), count(counts.tp + counts.fn), rates.tpr()));
  report.empirical_tnr = Probability(ratio_or(
      count(counts.tn), count(counts.tn + counts.fp), rates.tnr()));
  report.seed = seed;
  report.counts = counts;
  report.generator = "mt19937_64";
  return report;
}

}  // namespace infothresh
