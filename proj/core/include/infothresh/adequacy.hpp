#pragma once

#include <optional>
#include <string>
#include <vector>

#include "infothresh/threshold.hpp"
#include "infothresh/types.hpp"

namespace infothresh {

// Area under the prior-to-posterior curve and the lambda-adequacy rule:
// a classifier is adequate at level lambda when the area exceeds lambda.

// Closed-form area under rho(phi) over [0,1]:
//
//     AUC = a * (J + (b - 1) * ln(a / (1 - b))) / J^2,   J = a + b - 1.
//
// Near J = 0 the formula cancels catastrophically, so for |J/a| <= 1e-2
// the equivalent power series around the identity line is used
// (AUC = 1/2 + sum_{k>=3} u^(k-2)/(k(k-1)), u = J/a), which also yields
// the exact limit 1/2 at a + b = 1. Throws DomainError for a = 0 or
// b = 1 (the logarithm is undefined, the curve is degenerate).
double auc_closed_form(const ClassifierRates& rates);

struct AdequacyReport {
  ClassifierRates rates;
  double auc = 0.0;
  double lambda_threshold = 0.0;
  bool adequate = false;  // strict: auc > lambda_threshold
  double epsilon = 0.0;   // a + b
  ThresholdPoint threshold;
  double ratio_posterior_to_prior = 0.0;  // rho_e / phi_e
};

// Evaluates the adequacy rule at level lambda in (0,1).
AdequacyReport is_adequate(const ClassifierRates& rates, double lambda);

// Smallest tpr a (within 1e-6) with auc(a, tnr) >= lambda, by bisection
// on the strictly increasing AUC. Throws NoSolutionError when even
// a = 1 stays below lambda, DomainError for tnr = 1 or lambda outside
// (0,1).
Probability solve_min_tpr(Probability tnr, double lambda);

// Smallest tnr b (within 1e-6) with auc(tpr, b) >= lambda. Same error
// contract, with the roles of the rates swapped.
Probability solve_min_tnr(Probability tpr, double lambda);

// One solved scenario inside a table row: the fixed rate is given by
// the table, the other rate is the solved minimum.
struct ScenarioEntry {
  std::optional<Probability> solved_rate;
  std::optional<AdequacyReport> report;  // evaluated at the solved pair
  std::string ratio;                     // e.g. "9:1", rho_e:phi_e over 10
  std::string error;                     // non-empty when unsolvable
};

struct ScenarioRow {
  double lambda = 0.0;
  ScenarioEntry min_tpr;  // tnr fixed, tpr solved
  ScenarioEntry min_tnr;  // tpr fixed, tnr solved
};

// For each lambda, solves both scenarios against the same fixed rate.
// Unsolvable entries are marked in place rather than aborting the table.
std::vector<ScenarioRow> scenario_table(const std::vector<double>& lambdas,
                                        Probability fixed_rate);

// Rounds 10 * phi_e to the nearest half and renders rho_e:phi_e over
// ten, e.g. phi_e = 0.109 -> "9:1", phi_e = 0.169 -> "8.5:1.5".
std::string posterior_prior_ratio(Probability phi_e);

}  // namespace infothresh
