#include <benchmark/benchmark.h>

#include "qutrit/evolution.hpp"
#include "qutrit/freespace.hpp"
#include "qutrit/oracle.hpp"
#include "qutrit/pbg.hpp"
#include "qutrit/quantifiers.hpp"
#include "qutrit/quartic.hpp"
#include "qutrit/simulation.hpp"
#include "qutrit/state.hpp"

using namespace qutrit;

namespace {

const PhysicalScenario kPbg{Medium::PhotonicBandGap, 0.5, 0.0};

void BM_QuarticRoots(benchmark::State& state) {
  double delta = -1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(quartic_roots(1.0, delta, 0.5));
    delta = delta > 1.0 ? -1.0 : delta + 1e-3;
  }
}
BENCHMARK(BM_QuarticRoots);

void BM_FreeSpaceFundamental(benchmark::State& state) {
  const PhysicalScenario s{Medium::FreeSpace, 1.0, 0.0};
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(freespace_fundamental(s, t));
    t = t > 40.0 ? 0.0 : t + 0.01;
  }
}
BENCHMARK(BM_FreeSpaceFundamental);

void BM_PbgPropagatorSetup(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(PbgPropagator(kPbg));
}
BENCHMARK(BM_PbgPropagatorSetup);

// Time argument in units of alpha^2 t.
void BM_PbgFundamental(benchmark::State& state) {
  const PbgPropagator p(kPbg);
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(p.fundamental(t));
}
BENCHMARK(BM_PbgFundamental)->Arg(1)->Arg(10)->Arg(50);

void BM_TalbotInversion(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(inverse_laplace_oracle(kPbg, 1.0, 0.0, t));
}
BENCHMARK(BM_TalbotInversion)->Arg(1)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_Qfim(benchmark::State& state) {
  const Evolution e(kPbg);
  const InitialState init{kPi / 2, kPi / 4};
  const FundamentalSolution f = e.fundamental(5.0);
  const QutritDensityMatrix rho = density_matrix(f.apply(init.a0(), init.b0()), init, e.accuracy());
  const MatrixDerivative dt = parameter_derivative(f, init, Parameter::Theta);
  const MatrixDerivative dp = parameter_derivative(f, init, Parameter::Phi);
  for (auto _ : state) benchmark::DoNotOptimize(qfim(rho, dt, dp));
}
BENCHMARK(BM_Qfim);

void BM_SimulateRun(benchmark::State& state) {
  RunRequest r;
  r.scenario = kPbg;
  r.quantity = Quantity::Qfim;
  r.tmax = 50;
  r.steps = 2001;
  r.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(simulate(r));
}
BENCHMARK(BM_SimulateRun)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
