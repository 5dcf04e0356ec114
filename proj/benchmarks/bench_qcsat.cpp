#include <benchmark/benchmark.h>

#include <numeric>
#include <random>
#include <vector>

#include "qcsat/amplifier.hpp"
#include "qcsat/circuit.hpp"
#include "qcsat/cnf.hpp"
#include "qcsat/simulator.hpp"
#include "qcsat/truth_table.hpp"

namespace {

using namespace qcsat;

// deterministic random k-SAT instance
ClauseSet random_ksat(int n, int m, int k, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<int> vars(static_cast<std::size_t>(n));
  std::iota(vars.begin(), vars.end(), 1);
  std::vector<std::vector<int>> clauses;
  for (int c = 0; c < m; ++c) {
    std::shuffle(vars.begin(), vars.end(), rng);
    std::vector<int> clause;
    for (int i = 0; i < k; ++i)
      clause.push_back(rng() % 2 ? vars[static_cast<std::size_t>(i)]
                                 : -vars[static_cast<std::size_t>(i)]);
    clauses.push_back(std::move(clause));
  }
  return make_clause_set(n, clauses);
}

StateVector plus_state(int width) {
  StateVector s(width);
  for (int q = 1; q <= width; ++q) apply_gate(s, Gate::h(q));
  return s;
}

void BM_ApplyHadamard(benchmark::State& state) {
  const int width = static_cast<int>(state.range(0));
  StateVector s = plus_state(width);
  for (auto _ : state) {
    apply_gate(s, Gate::h(width / 2));
    benchmark::DoNotOptimize(s.amp(0));
  }
  state.SetItemsProcessed(state.iterations() * (1ll << width));
}
BENCHMARK(BM_ApplyHadamard)->Arg(16)->Arg(20)->Arg(22);

void BM_ApplyCCNot(benchmark::State& state) {
  const int width = static_cast<int>(state.range(0));
  StateVector s = plus_state(width);
  for (auto _ : state) {
    apply_gate(s, Gate::ccx(1, 2, width));
    benchmark::DoNotOptimize(s.amp(0));
  }
  state.SetItemsProcessed(state.iterations() * (1ll << width));
}
BENCHMARK(BM_ApplyCCNot)->Arg(16)->Arg(20)->Arg(22);

void BM_SynthesizeCircuit(benchmark::State& state) {
  const ClauseSet cs = random_ksat(50, static_cast<int>(state.range(0)), 3, 1);
  for (auto _ : state) {
    const Circuit c = synthesize(cs);
    benchmark::DoNotOptimize(c.gates.size());
  }
}
BENCHMARK(BM_SynthesizeCircuit)->Arg(50)->Arg(200);

void BM_DensePipeline(benchmark::State& state) {
  // n=10, four 3-literal clauses: 21 lines, a 2^21 state
  const ClauseSet cs = random_ksat(10, 4, 3, 2);
  const Circuit c = synthesize(cs);
  for (auto _ : state) {
    StateVector s(c.width);
    run(c, s);
    benchmark::DoNotOptimize(success_probability(s, c.layout).q_squared);
  }
}
BENCHMARK(BM_DensePipeline)->Unit(benchmark::kMillisecond);

void BM_TruthTablePipeline(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ClauseSet cs = random_ksat(n, 4 * n, 3, 3);
  const Circuit c = synthesize(cs);
  for (auto _ : state)
    benchmark::DoNotOptimize(truth_table_run(cs, c).satisfying_count);
  state.SetItemsProcessed(state.iterations() * (1ll << n));
}
BENCHMARK(BM_TruthTablePipeline)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_EnumerateSatisfying(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ClauseSet cs = random_ksat(n, 4 * n, 3, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_satisfying(cs).count);
  state.SetItemsProcessed(state.iterations() * (1ll << n));
}
BENCHMARK(BM_EnumerateSatisfying)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_AmplifierGrid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(empirical_t_c(n));
  state.SetItemsProcessed(state.iterations() * (1ll << (n - 1)));
}
BENCHMARK(BM_AmplifierGrid)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
