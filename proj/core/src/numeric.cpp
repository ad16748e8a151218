#include "infothresh/numeric.hpp"

#include <cmath>
#include <sstream>

#include "infothresh/curve.hpp"

namespace infothresh {

namespace {

// Golden-section search for the maximum of f on [lo, hi], assumed
// unimodal there; shrinks the bracket to the requested width.
double golden_section_max(const std::function<double(double)>& f, double lo,
                          double hi, double width) {
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > width) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
  }
  return (lo + hi) / 2.0;
}

}  // namespace

double finite_diff(const std::function<double(double)>& f, double x, double h,
                   int order, double lo, double hi) {
  if (!(h > 0.0)) {
    throw DomainError("finite_diff: step h must be positive");
  }
  if (order != 1 && order != 2) {
    throw DomainError("finite_diff: order must be 1 or 2");
  }
  if (x - h < lo || x + h > hi) {
    std::ostringstream msg;
    msg << "finite_diff: stencil [" << x - h << ", " << x + h
        << "] exits the domain [" << lo << ", " << hi << "]";
    throw DomainError(msg.str());
  }

  if (order == 1) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
  }
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

GridSearchResult maximize_curvature(const ClassifierRates& rates,
                                    double grid_step) {
  if (!(grid_step > 0.0) || grid_step > 1e-3) {
    throw DomainError("maximize_curvature: grid_step must be in (0, 1e-3]");
  }
  if (youden_j(rates) == 0.0) {
    throw DomainError(
        "maximize_curvature: curvature is identically zero on the identity "
        "line (tpr + tnr = 1), nothing to maximize");
  }

  const auto kappa = [&rates](double phi) {
    return curvature(rates, Probability(phi));
  };

  // Coarse scan to bracket the peak, then golden-section refinement.
  const auto n = static_cast<std::uint64_t>(std::ceil(1.0 / grid_step));
  double best_phi = 0.0;
  double best_value = kappa(0.0);
  for (std::uint64_t i = 1; i <= n; ++i) {
    const double phi = std::min(1.0, static_cast<double>(i) * grid_step);
    const double value = kappa(phi);
    if (value > best_value) {
      best_value = value;
      best_phi = phi;
    }
  }

  const double lo = std::max(0.0, best_phi - grid_step);
  const double hi = std::min(1.0, best_phi + grid_step);
  const double arg_max = golden_section_max(kappa, lo, hi, 1e-10);
  return {arg_max, kappa(arg_max), grid_step, true};
}

QuadratureResult integrate_curve(const ClassifierRates& rates,
                                 std::uint64_t n_intervals) {
  if (n_intervals < 2) {
    throw DomainError("integrate_curve: need at least 2 intervals");
  }

  const auto rho = [&rates](double phi) {
    return posterior(rates, Probability(phi)).value();
  };

  // One composite trapezoid pass at the requested resolution plus one
  // at half resolution; the Richardson gap (T_n - T_{n/2}) / 3 bounds
  // the second-order error of the finer pass.
  const auto trapezoid = [&rho](std::uint64_t n) {
    double sum = (rho(0.0) + rho(1.0)) / 2.0;
    for (std::uint64_t i = 1; i < n; ++i) {
      sum += rho(static_cast<double>(i) / static_cast<double>(n));
    }
    return sum / static_cast<double>(n);
  };

  const double fine = trapezoid(n_intervals);
  const double coarse = trapezoid(n_intervals / 2);
  return {fine, n_intervals, std::abs(fine - coarse) / 3.0};
}

double bisect_root(const std::function<double(double)>& f, double lo,
                   double hi, double tol) {
  if (!(tol > 0.0)) {
    throw DomainError("bisect_root: tol must be positive");
  }
  if (lo > hi) {
    std::swap(lo, hi);
  }
  double f_lo = f(lo);
  double f_hi = f(hi);
  if (f_lo == 0.0) {
    return lo;
  }
  if (f_hi == 0.0) {
    return hi;
  }
  if ((f_lo < 0.0) == (f_hi < 0.0)) {
    throw DomainError("bisect_root: f(lo) and f(hi) have the same sign, "
                      "no root bracketed");
  }

  while (hi - lo > tol) {
    const double mid = lo + (hi - lo) / 2.0;
    const double f_mid = f(mid);
    if (f_mid == 0.0) {
      return mid;
    }
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2.0;
}

}  // namespace infothresh
