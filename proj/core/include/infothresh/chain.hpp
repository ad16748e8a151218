#pragma once

#include <optional>
#include <string>
#include <vector>

#include "infothresh/types.hpp"

namespace infothresh {

// Sequential Bayesian updating over an ordered list of evidence items,
// each posterior feeding the next update as its prior, with a stopping
// rule at the information threshold.

enum class Outcome { positive, negative };

struct EvidenceItem {
  std::string label;
  ClassifierRates rates;  // reliability of this clue as a classifier
  Outcome outcome = Outcome::positive;
};

struct ChainStep {
  std::string item_label;
  Probability prior_before;
  Probability posterior_after;
  Probability phi_e_of_item;
  bool stopped_here = false;
};

struct ChainTrace {
  Probability initial_prior;
  std::vector<ChainStep> steps;
  Probability final_belief;
  std::optional<std::size_t> stopped_at;
  // Set when an update had an undefined posterior; steps then holds the
  // completed prefix and final_belief the last well-defined value.
  std::optional<std::size_t> aborted_at;
  std::string abort_reason;
};

// Slack applied to the stopping inequalities; the rule is a plateau
// detector, not an exact root, so it tolerates inputs specified at
// display precision.
inline constexpr double kStopTolerance = 1e-3;

// Applies every item in order (posterior for positive outcomes,
// negative_posterior for negative ones). When stop_on_threshold is set,
// the first step k satisfying
//
//   LR+ of item k > 1
//   prior_before(k) + posterior_after(k) >= 1 - kStopTolerance
//   prior_before(k) >= phi_e(item k) - kStopTolerance
//
// is recorded as stopped_at = k; later steps are still computed so the
// diminishing gains past the stop stay inspectable. An item whose
// rates make phi_e undefined (tpr 0 and tnr 1) or whose update divides
// by zero aborts the chain with a partial trace instead of throwing.
ChainTrace run_chain(Probability initial_prior,
                     const std::vector<EvidenceItem>& items,
                     bool stop_on_threshold = true);

struct StoppingReport {
  std::optional<std::size_t> stopped_at;
  std::optional<double> belief_at_stop;
  std::optional<double> gain_at_stop;
  std::vector<double> step_gains;       // posterior - prior, every step
  std::vector<double> post_stop_gains;  // gains of steps after the stop
};

// Summarizes how much each step moved the belief and what was left to
// gain after the stopping point.
StoppingReport stopping_report(const ChainTrace& trace);

}  // namespace infothresh
