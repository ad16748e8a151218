#include <doctest.h>

#include <cmath>
#include <random>

#include "infothresh/adequacy.hpp"
#include "infothresh/numeric.hpp"

using namespace infothresh;

TEST_SUITE("adequacy") {

TEST_CASE("closed-form area against frozen values") {
  CHECK(auc_closed_form(ClassifierRates(0.5, 0.5)) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK(auc_closed_form(ClassifierRates(0.95, 0.99)) ==
        doctest::Approx(0.961677421378220).epsilon(1e-12));
  CHECK(auc_closed_form(ClassifierRates(0.667, 0.99)) ==
        doctest::Approx(0.950317579709470).epsilon(1e-12));
  CHECK(auc_closed_form(ClassifierRates(0.85, 0.95)) ==
        doctest::Approx(0.874356926371267).epsilon(1e-12));
  CHECK(auc_closed_form(ClassifierRates(0.9, 0.6)) ==
        doctest::Approx(0.632260488648487).epsilon(1e-12));
  // Worse than chance drops below one half.
  CHECK(auc_closed_form(ClassifierRates(0.2, 0.4)) < 0.5);
  CHECK_THROWS_AS(auc_closed_form(ClassifierRates(0.0, 0.5)), DomainError);
  CHECK_THROWS_AS(auc_closed_form(ClassifierRates(0.5, 1.0)), DomainError);
}

TEST_CASE("closed form agrees with quadrature off the identity line") {
  std::mt19937 rng(63);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  int tested = 0;
  while (tested < 25) {
    const double a = 0.05 + 0.95 * uniform(rng);
    const double b = 0.995 * uniform(rng);
    if (std::abs(a + b - 1.0) <= 0.01) {
      continue;
    }
    ++tested;
    const ClassifierRates rates(a, b);
    CAPTURE(a);
    CAPTURE(b);
    CHECK(auc_closed_form(rates) ==
          doctest::Approx(integrate_curve(rates, 100000).value)
              .epsilon(1e-6));
  }
}

TEST_CASE("series branch is continuous across the identity line") {
  // Exactly on the line, and approaching it from both sides.
  CHECK(auc_closed_form(ClassifierRates(0.6, 0.4)) == 0.5);
  CHECK(std::abs(auc_closed_form(ClassifierRates(0.6, 0.4 + 1e-9)) - 0.5) <
        1e-6);
  CHECK(std::abs(auc_closed_form(ClassifierRates(0.6, 0.4 - 1e-9)) - 0.5) <
        1e-6);

  // Both branches agree where they meet (|J/a| near 1e-2).
  for (const double b : {0.4059, 0.4061}) {
    const ClassifierRates rates(0.6, b);
    CHECK(auc_closed_form(rates) ==
          doctest::Approx(integrate_curve(rates, 200000).value)
              .epsilon(1e-7));
  }
}

TEST_CASE("area is strictly monotone in both rates") {
  for (int i = 0; i < 19; ++i) {
    const double low = 0.05 * (i + 1);
    const double high = 0.05 * (i + 2);
    CHECK(auc_closed_form(ClassifierRates(high, 0.7)) >
          auc_closed_form(ClassifierRates(low, 0.7)));
    if (high < 1.0) {  // tnr = 1 is outside the area's domain
      CHECK(auc_closed_form(ClassifierRates(0.7, high)) >
            auc_closed_form(ClassifierRates(0.7, low)));
    }
  }
}

TEST_CASE("adequacy report") {
  const AdequacyReport good = is_adequate(ClassifierRates(0.95, 0.99), 0.95);
  CHECK(good.adequate);
  CHECK(good.auc == doctest::Approx(0.961677421378220).epsilon(1e-12));
  CHECK(good.epsilon == doctest::Approx(1.94).epsilon(1e-12));
  CHECK(good.threshold.phi_e.value() ==
        doctest::Approx(0.093051003668181).epsilon(1e-12));
  CHECK(good.ratio_posterior_to_prior ==
        doctest::Approx(0.906948996331819 / 0.093051003668181).epsilon(1e-9));

  const AdequacyReport coin = is_adequate(ClassifierRates(0.5, 0.5), 0.95);
  CHECK_FALSE(coin.adequate);
  CHECK(coin.auc == 0.5);
  CHECK(coin.ratio_posterior_to_prior == doctest::Approx(1.0).epsilon(1e-12));

  // The boundary case follows the strict comparison of the computed
  // area (0.95031... > 0.95).
  CHECK(is_adequate(ClassifierRates(0.667, 0.99), 0.95).adequate);

  CHECK_THROWS_AS(is_adequate(ClassifierRates(0.9, 0.9), 0.0), DomainError);
  CHECK_THROWS_AS(is_adequate(ClassifierRates(0.9, 0.9), 1.0), DomainError);
}

TEST_CASE("minimal-rate solvers against frozen values") {
  CHECK(solve_min_tpr(Probability(0.99), 0.95).value() ==
        doctest::Approx(0.661154146982).epsilon(2e-6));
  CHECK(solve_min_tpr(Probability(0.99), 0.90).value() ==
        doctest::Approx(0.242587896720).epsilon(2e-6));
  CHECK(solve_min_tpr(Probability(0.99), 0.80).value() ==
        doctest::Approx(0.077608897562).epsilon(2e-6));
  CHECK(solve_min_tnr(Probability(0.99), 0.95).value() ==
        doctest::Approx(0.985026184824).epsilon(2e-6));
  CHECK(solve_min_tnr(Probability(0.99), 0.90).value() ==
        doctest::Approx(0.959190049735).epsilon(2e-6));
  CHECK(solve_min_tnr(Probability(0.99), 0.85).value() ==
        doctest::Approx(0.922328977281).epsilon(2e-6));

  // The reference table prints two decimals; stay inside that.
  CHECK(std::abs(solve_min_tpr(Probability(0.99), 0.90).value() - 0.25) <
        0.01);
  CHECK(std::abs(solve_min_tnr(Probability(0.99), 0.95).value() - 0.985) <
        0.001);
}

TEST_CASE("solved rates are adequate and tight") {
  for (const double lambda : {0.95, 0.90, 0.85, 0.80}) {
    const double a = solve_min_tpr(Probability(0.99), lambda).value();
    CHECK(auc_closed_form(ClassifierRates(a, 0.99)) >= lambda);
    CHECK(auc_closed_form(ClassifierRates(a, 0.99)) ==
          doctest::Approx(lambda).epsilon(1e-5));

    const double b = solve_min_tnr(Probability(0.99), lambda).value();
    CHECK(auc_closed_form(ClassifierRates(0.99, b)) >= lambda);
    CHECK(auc_closed_form(ClassifierRates(0.99, b)) ==
          doctest::Approx(lambda).epsilon(1e-5));
  }
}

TEST_CASE("solvers reject unreachable targets") {
  // tnr = 0.99 caps the area at 0.963114 even for tpr = 1.
  CHECK_THROWS_AS(solve_min_tpr(Probability(0.99), 0.97), NoSolutionError);
  CHECK_THROWS_AS(solve_min_tpr(Probability(1.0), 0.9), DomainError);
  CHECK_THROWS_AS(solve_min_tnr(Probability(0.0), 0.9), DomainError);
  CHECK_THROWS_AS(solve_min_tpr(Probability(0.99), 1.5), DomainError);
  // tnr -> 1 pushes the area to 1, so min-tnr always has a solution.
  CHECK(solve_min_tnr(Probability(0.5), 0.99).value() > 0.99);
}

TEST_CASE("scenario table matches the reference layout") {
  const std::vector<ScenarioRow> rows =
      scenario_table({0.95, 0.90, 0.85, 0.80}, Probability(0.99));
  REQUIRE(rows.size() == 4);

  const double expected_phi[] = {0.109515367731, 0.168767220108,
                                 0.218810560336, 0.264142356581};
  const char* expected_ratio[] = {"9:1", "8.5:1.5", "8:2", "7.5:2.5"};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(i);
    REQUIRE(rows[i].min_tpr.error.empty());
    REQUIRE(rows[i].min_tnr.error.empty());
    const double phi_fixed_tnr =
        rows[i].min_tpr.report->threshold.phi_e.value();
    const double phi_fixed_tpr =
        rows[i].min_tnr.report->threshold.phi_e.value();
    // Both scenarios share the threshold prior.
    CHECK(phi_fixed_tnr == doctest::Approx(expected_phi[i]).epsilon(1e-4));
    CHECK(phi_fixed_tpr == doctest::Approx(expected_phi[i]).epsilon(1e-4));
    CHECK(rows[i].min_tpr.ratio == expected_ratio[i]);
    CHECK(rows[i].min_tnr.ratio == expected_ratio[i]);
  }

  // Unreachable lambdas are marked per row, not thrown.
  const std::vector<ScenarioRow> partial =
      scenario_table({0.97}, Probability(0.99));
  REQUIRE(partial.size() == 1);
  CHECK(!partial[0].min_tpr.error.empty());
  CHECK(partial[0].min_tnr.error.empty());  // raising tnr can reach 0.97
}

TEST_CASE("ratio rendering rounds to halves over ten") {
  CHECK(posterior_prior_ratio(Probability(0.109)) == "9:1");
  CHECK(posterior_prior_ratio(Probability(0.169)) == "8.5:1.5");
  CHECK(posterior_prior_ratio(Probability(0.219)) == "8:2");
  CHECK(posterior_prior_ratio(Probability(0.264)) == "7.5:2.5");
  CHECK(posterior_prior_ratio(Probability(0.5)) == "5:5");
  CHECK(posterior_prior_ratio(Probability(0.0)) == "10:0");
}

}  // TEST_SUITE
