#pragma once

#include <cstdint>
#include <string>

#include "infothresh/types.hpp"

namespace infothresh {

// Outcome of one seeded Monte Carlo run. Two reports from the same
// inputs and seed are bit-identical.
struct SimulationReport {
  std::uint64_t n_samples = 0;
  Probability prevalence;
  Probability empirical_ppv;  // tp / (tp + fp); prevalence when nothing was flagged
  Probability empirical_tpr;
  Probability empirical_tnr;
  std::uint64_t seed = 0;
  ConfusionCounts counts;
  std::string generator;  // RNG identifier, currently always "mt19937_64"
};

// Draws n ground-truth labels at the given prevalence, applies the
// classifier with the given rates to each, and tallies the table.
// Uniform variates are derived from the raw 64-bit generator output
// ((x >> 11) * 2^-53) so runs reproduce bit-for-bit across platforms.
// A rate whose class went unsampled falls back to the input rate, and
// PPV falls back to the prevalence when the classifier flags nothing
// (no positive evidence leaves belief at the prior).
SimulationReport simulate_confusion(const ClassifierRates& rates,
                                    Probability prevalence, std::uint64_t n,
                                    std::uint64_t seed);

}  // namespace infothresh
