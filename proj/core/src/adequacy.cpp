#include "infothresh/adequacy.hpp"

#include <cmath>
#include <sstream>

#include "infothresh/curve.hpp"
#include "infothresh/numeric.hpp"

namespace infothresh {

namespace {

// Series form of the area around the identity line, in u = J/a:
// sum_{k>=2} u^(k-2) / (k*(k-1)) = 1/2 + u/6 + u^2/12 + ... Converges
// fast for small |u|; terms are added until they stop contributing.
double auc_series(double u) {
  double sum = 0.0;
  double power = 1.0;  // u^(k-2)
  for (int k = 2; k < 64; ++k) {
    const double term = power / (static_cast<double>(k) * (k - 1.0));
    const double next = sum + term;
    if (next == sum) {
      break;
    }
    sum = next;
    power *= u;
  }
  return sum;
}

void check_lambda(double lambda) {
  if (!(lambda > 0.0) || !(lambda < 1.0)) {
    std::ostringstream msg;
    msg << "lambda must lie in (0, 1), got " << lambda;
    throw DomainError(msg.str());
  }
}

ScenarioEntry solve_entry(bool fix_tnr, Probability fixed_rate,
                          double lambda) {
  ScenarioEntry entry;
  try {
    const Probability solved = fix_tnr ? solve_min_tpr(fixed_rate, lambda)
                                       : solve_min_tnr(fixed_rate, lambda);
    const ClassifierRates pair =
        fix_tnr ? ClassifierRates(solved.value(), fixed_rate.value())
                : ClassifierRates(fixed_rate.value(), solved.value());
    entry.solved_rate = solved;
    entry.report = is_adequate(pair, lambda);
    entry.ratio = posterior_prior_ratio(entry.report->threshold.phi_e);
  } catch (const Error& e) {
    entry.error = e.what();
  }
  return entry;
}

}  // namespace

double auc_closed_form(const ClassifierRates& rates) {
  const double a = rates.tpr();
  const double c = rates.fall_out();
  if (a == 0.0 || c == 0.0) {
    throw DomainError(
        "auc_closed_form: degenerate curve for tpr = 0 or tnr = 1");
  }

  const double j = youden_j(rates);
  const double u = j / a;
  if (std::abs(u) <= 1e-2) {
    return auc_series(u);
  }
  return a * (j - c * std::log(a / c)) / (j * j);
}

AdequacyReport is_adequate(const ClassifierRates& rates, double lambda) {
  check_lambda(lambda);

  AdequacyReport report{rates,
                        auc_closed_form(rates),
                        lambda,
                        false,
                        epsilon(rates),
                        information_threshold(rates),
                        0.0};
  report.adequate = report.auc > lambda;
  const double phi_e = report.threshold.phi_e.value();
  if (phi_e > 0.0) {
    report.ratio_posterior_to_prior = report.threshold.rho_e.value() / phi_e;
  }
  return report;
}

Probability solve_min_tpr(Probability tnr, double lambda) {
  check_lambda(lambda);
  if (tnr.value() >= 1.0) {
    throw DomainError("solve_min_tpr: tnr = 1 makes the area undefined");
  }

  const auto auc_at = [&tnr](double a) {
    return auc_closed_form(ClassifierRates(a, tnr.value()));
  };
  if (auc_at(1.0) < lambda) {
    std::ostringstream msg;
    msg << "solve_min_tpr: even tpr = 1 reaches only area " << auc_at(1.0)
        << " < " << lambda << " at tnr = " << tnr.value();
    throw NoSolutionError(msg.str());
  }

  // The area is strictly increasing in tpr and -> 0 as tpr -> 0, so a
  // sign change is guaranteed on (0, 1]. The half-tolerance bracket
  // plus the nudge below keeps the result adequate and within 1e-6 of
  // the true minimum.
  const double root = bisect_root(
      [&auc_at, lambda](double a) { return auc_at(a) - lambda; }, 1e-12, 1.0,
      5e-7);
  return Probability(auc_at(root) >= lambda ? root
                                            : std::min(1.0, root + 5e-7));
}

Probability solve_min_tnr(Probability tpr, double lambda) {
  check_lambda(lambda);
  if (tpr.value() <= 0.0) {
    throw DomainError("solve_min_tnr: tpr = 0 makes the area undefined");
  }

  const auto auc_at = [&tpr](double b) {
    return auc_closed_form(ClassifierRates(tpr.value(), b));
  };
  const double b_max = 1.0 - 1e-12;
  if (auc_at(b_max) < lambda) {
    std::ostringstream msg;
    msg << "solve_min_tnr: even tnr -> 1 reaches only area " << auc_at(b_max)
        << " < " << lambda << " at tpr = " << tpr.value();
    throw NoSolutionError(msg.str());
  }

  const double root = bisect_root(
      [&auc_at, lambda](double b) { return auc_at(b) - lambda; }, 0.0, b_max,
      5e-7);
  return Probability(auc_at(root) >= lambda ? root
                                            : std::min(b_max, root + 5e-7));
}

std::vector<ScenarioRow> scenario_table(const std::vector<double>& lambdas,
                                        Probability fixed_rate) {
  std::vector<ScenarioRow> rows;
  rows.reserve(lambdas.size());
  for (const double lambda : lambdas) {
    ScenarioRow row;
    row.lambda = lambda;
    row.min_tpr = solve_entry(true, fixed_rate, lambda);
    row.min_tnr = solve_entry(false, fixed_rate, lambda);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string posterior_prior_ratio(Probability phi_e) {
  const double halves = std::round(20.0 * phi_e.value());
  const auto render = [](double tenths) {
    std::ostringstream out;
    if (tenths == std::floor(tenths)) {
      out << static_cast<long long>(tenths);
    } else {
      out << tenths;  // always one decimal, a multiple of 0.5
    }
    return out.str();
  };
  return render((20.0 - halves) / 2.0) + ":" + render(halves / 2.0);
}

}  // namespace infothresh
