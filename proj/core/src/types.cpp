#include "infothresh/types.hpp"

#include <cmath>
#include <sstream>

namespace infothresh {

namespace {

double checked_probability(double value, const char* what) {
  if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
    std::ostringstream msg;
    msg << what << " must be a probability in [0, 1], got " << value;
    throw DomainError(msg.str());
  }
  return value;
}

}  // namespace

Probability::Probability(double value)
    : value_(checked_probability(value, "value")) {}

ClassifierRates::ClassifierRates(double tpr, double tnr)
    : tpr_(checked_probability(tpr, "tpr")),
      tnr_(checked_probability(tnr, "tnr")) {}

double youden_j(const ClassifierRates& rates) noexcept {
  return rates.tpr() + rates.tnr() - 1.0;
}

double epsilon(const ClassifierRates& rates) noexcept {
  return rates.tpr() + rates.tnr();
}

double lr_positive(const ClassifierRates& rates) {
  if (rates.tnr() >= 1.0) {
    throw DomainError("lr_positive: tnr = 1 has no false positives, LR+ diverges");
  }
  return rates.tpr() / rates.fall_out();
}

ClassifierRates rates_from_counts(const ConfusionCounts& counts) {
  const std::uint64_t positives = counts.tp + counts.fn;
  const std::uint64_t negatives = counts.tn + counts.fp;
  if (positives == 0) {
    throw DomainError("rates_from_counts: no ground-truth positives (tp + fn = 0)");
  }
  if (negatives == 0) {
    throw DomainError("rates_from_counts: no ground-truth negatives (tn + fp = 0)");
  }
  return ClassifierRates(static_cast<double>(counts.tp) / static_cast<double>(positives),
                         static_cast<double>(counts.tn) / static_cast<double>(negatives));
}

ConfusionCounts one_vs_rest(
    const std::vector<std::vector<std::uint64_t>>& class_counts,
    std::size_t target_index) {
  const std::size_t n = class_counts.size();
  if (n < 2) {
    throw DomainError("one_vs_rest: need at least two classes");
  }
  for (const auto& row : class_counts) {
    if (row.size() != n) {
      throw DomainError("one_vs_rest: confusion matrix must be square");
    }
  }
  if (target_index >= n) {
    std::ostringstream msg;
    msg << "one_vs_rest: target_index " << target_index << " out of range for "
        << n << " classes";
    throw DomainError(msg.str());
  }

  ConfusionCounts out;
  for (std::size_t truth = 0; truth < n; ++truth) {
    for (std::size_t predicted = 0; predicted < n; ++predicted) {
      const std::uint64_t cell = class_counts[truth][predicted];
      if (truth == target_index) {
        (predicted == target_index ? out.tp : out.fn) += cell;
      } else {
        (predicted == target_index ? out.fp : out.tn) += cell;
      }
    }
  }
  return out;
}

}  // namespace infothresh
