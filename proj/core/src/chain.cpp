#include "infothresh/chain.hpp"

#include "infothresh/curve.hpp"
#include "infothresh/threshold.hpp"

namespace infothresh {

ChainTrace run_chain(Probability initial_prior,
                     const std::vector<EvidenceItem>& items,
                     bool stop_on_threshold) {
  if (items.empty()) {
    throw DomainError("run_chain: need at least one evidence item");
  }
  if (initial_prior.value() <= 0.0 || initial_prior.value() >= 1.0) {
    throw DomainError(
        "run_chain: initial prior must lie strictly inside (0, 1); the "
        "endpoints are absorbing and no evidence can move them");
  }

  ChainTrace trace;
  trace.initial_prior = initial_prior;
  trace.final_belief = initial_prior;
  trace.steps.reserve(items.size());

  Probability belief = initial_prior;
  for (std::size_t k = 0; k < items.size(); ++k) {
    const EvidenceItem& item = items[k];
    ChainStep step;
    step.item_label = item.label;
    step.prior_before = belief;

    try {
      const ThresholdPoint threshold = information_threshold(item.rates);
      step.phi_e_of_item = threshold.phi_e;
      step.posterior_after = item.outcome == Outcome::positive
                                 ? posterior(item.rates, belief)
                                 : negative_posterior(item.rates, belief);
    } catch (const DomainError& e) {
      trace.aborted_at = k;
      trace.abort_reason = e.what();
      return trace;
    }

    if (stop_on_threshold && !trace.stopped_at.has_value()) {
      // Stop once the evidence is informative (LR+ > 1) and the prior
      // has reached the item's threshold with the sum condition met.
      // tnr = 1 with tpr > 0 (the 0/0 pair aborted above) has
      // unbounded LR+; any stand-in above 1 will do.
      const double lr =
          item.rates.tnr() < 1.0 ? lr_positive(item.rates) : 2.0;
      const double sum =
          step.prior_before.value() + step.posterior_after.value();
      if (lr > 1.0 && sum >= 1.0 - kStopTolerance &&
          step.prior_before.value() >=
              step.phi_e_of_item.value() - kStopTolerance) {
        step.stopped_here = true;
        trace.stopped_at = k;
      }
    }

    belief = step.posterior_after;
    trace.final_belief = belief;
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

StoppingReport stopping_report(const ChainTrace& trace) {
  StoppingReport report;
  report.stopped_at = trace.stopped_at;
  report.step_gains.reserve(trace.steps.size());

  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const ChainStep& step = trace.steps[k];
    const double gain =
        step.posterior_after.value() - step.prior_before.value();
    report.step_gains.push_back(gain);
    if (trace.stopped_at.has_value()) {
      if (k == *trace.stopped_at) {
        report.belief_at_stop = step.posterior_after.value();
        report.gain_at_stop = gain;
      } else if (k > *trace.stopped_at) {
        report.post_stop_gains.push_back(gain);
      }
    }
  }
  return report;
}

}  // namespace infothresh
