#include <benchmark/benchmark.h>

#include "mpa/extremum.hpp"
#include "mpa/fock.hpp"
#include "mpa/pde.hpp"

namespace {

using namespace mpa;

void BM_Residual8d(benchmark::State& state) {
  ModeSpec spec;
  spec.ctx = UnitContext::dimensionless(0.5);
  spec.part = {1.0, {0.2, -0.1, 0.3}, 1.2, {0.4, 0.1, -0.2}};
  const FourVector x{0.3, 0.1, -0.4, 0.2};
  const FourVector v{1.1, 0.2, 0.0, 0.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(residual_8d(spec, x, v, {1e-3}));
  }
}
BENCHMARK(BM_Residual8d);

void BM_CommutatorCheck(benchmark::State& state) {
  const ModeLattice lattice = ModeLattice::line(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(commutator_check(lattice, 4));
  }
}
BENCHMARK(BM_CommutatorCheck)->Arg(2)->Arg(3)->Arg(4);

void BM_InequalityScan(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(inequality_scan(static_cast<std::size_t>(state.range(0)), 7));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_InequalityScan)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_BruteForceMin(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_min(0.8, 0.4));
  }
}
BENCHMARK(BM_BruteForceMin)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
