#include <benchmark/benchmark.h>

#include <vector>

#include "infothresh/infothresh.hpp"

namespace {

using namespace infothresh;

void BM_Posterior(benchmark::State& state) {
  const ClassifierRates rates(0.95, 0.99);
  double phi = 0.093;
  for (auto _ : state) {
    benchmark::DoNotOptimize(posterior(rates, Probability(phi)));
  }
}
BENCHMARK(BM_Posterior);

void BM_Curvature(benchmark::State& state) {
  const ClassifierRates rates(0.95, 0.99);
  for (auto _ : state) {
    benchmark::DoNotOptimize(curvature(rates, Probability(0.25)));
  }
}
BENCHMARK(BM_Curvature);

void BM_InformationThreshold(benchmark::State& state) {
  const ClassifierRates rates(0.85, 0.95);
  for (auto _ : state) {
    benchmark::DoNotOptimize(information_threshold(rates));
  }
}
BENCHMARK(BM_InformationThreshold);

void BM_AucClosedForm(benchmark::State& state) {
  const ClassifierRates rates(0.95, 0.99);
  for (auto _ : state) {
    benchmark::DoNotOptimize(auc_closed_form(rates));
  }
}
BENCHMARK(BM_AucClosedForm);

void BM_MaximizeCurvature(benchmark::State& state) {
  const ClassifierRates rates(0.95, 0.99);
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximize_curvature(rates));
  }
}
BENCHMARK(BM_MaximizeCurvature);

void BM_IntegrateCurve(benchmark::State& state) {
  const ClassifierRates rates(0.95, 0.99);
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_curve(rates, 10000));
  }
}
BENCHMARK(BM_IntegrateCurve);

void BM_SolveMinTpr(benchmark::State& state) {
  const Probability tnr(0.99);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_min_tpr(tnr, 0.95));
  }
}
BENCHMARK(BM_SolveMinTpr);

void BM_SimulateConfusion(benchmark::State& state) {
  const ClassifierRates rates(0.95, 0.99);
  const Probability prevalence(0.093);
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_confusion(rates, prevalence, 10000, 42));
  }
}
BENCHMARK(BM_SimulateConfusion);

void BM_RunChain(benchmark::State& state) {
  const std::vector<EvidenceItem> items = {
      {"a", ClassifierRates(0.70, 0.60), Outcome::positive},
      {"b", ClassifierRates(0.60, 0.80), Outcome::positive},
      {"c", ClassifierRates(0.85, 0.90), Outcome::positive},
      {"d", ClassifierRates(0.90, 0.95), Outcome::positive},
      {"e", ClassifierRates(0.80, 0.85), Outcome::positive},
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_chain(Probability(0.2), items));
  }
}
BENCHMARK(BM_RunChain);

}  // namespace

BENCHMARK_MAIN();
