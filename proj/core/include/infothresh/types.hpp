#pragma once

#include <cstdint>
#include <vector>

#include "infothresh/errors.hpp"

namespace infothresh {

// A probability value, validated once at construction and immutable
// afterwards. Everything in this library that is a belief, a rate or a
// prevalence travels as one of these.
class Probability {
public:
  Probability() = default;
  explicit Probability(double value);

  double value() const noexcept { return value_; }

private:
  double value_ = 0.0;
};

// Operating point of a binary classifier.
//   tpr (a): true positive rate, sensitivity
//   tnr (b): true negative rate, specificity
class ClassifierRates {
public:
  ClassifierRates(double tpr, double tnr);

  double tpr() const noexcept { return tpr_; }
  double tnr() const noexcept { return tnr_; }

  // Fall-out c = 1 - b, the false positive rate.
  double fall_out() const noexcept { return 1.0 - tnr_; }

private:
  double tpr_;
  double tnr_;
};

// Youden's J = a + b - 1, in [-1, 1]. Zero means an uninformative
// classifier; negative means worse than chance.
double youden_j(const ClassifierRates& rates) noexcept;

// epsilon = a + b, in [0, 2].
double epsilon(const ClassifierRates& rates) noexcept;

// Positive likelihood ratio LR+ = a / (1 - b). Throws DomainError when
// b = 1 (no false positives, the ratio diverges).
double lr_positive(const ClassifierRates& rates);

// Raw 2x2 contingency table.
struct ConfusionCounts {
  std::uint64_t tp = 0;  // true positives
  std::uint64_t fp = 0;  // false positives
  std::uint64_t fn = 0;  // false negatives
  std::uint64_t tn = 0;  // true negatives

  std::uint64_t total() const noexcept { return tp + fp + fn + tn; }
};

// a = tp/(tp+fn), b = tn/(tn+fp). Throws DomainError when either
// ground-truth class is empty.
ClassifierRates rates_from_counts(const ConfusionCounts& counts);

// Collapses a square multiclass confusion matrix (rows = truth,
// columns = prediction) into the binary table for class target_index
// against the rest. Cell totals are preserved. Throws DomainError for
// fewer than two classes, a ragged matrix, or a bad index.
ConfusionCounts one_vs_rest(
    const std::vector<std::vector<std::uint64_t>>& class_counts,
    std::size_t target_index);

}  // namespace infothresh
