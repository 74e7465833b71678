#include <benchmark/benchmark.h>

#include "edgefog/generator.hpp"
#include "edgefog/lap.hpp"
#include "edgefog/lpcf.hpp"
#include "edgefog/model.hpp"
#include "edgefog/noc.hpp"

using namespace edgefog;

namespace {

Instance instance_of(int n, std::uint64_t seed = 1) {
  GenParams p;
  p.n_total = n;
  p.seed = seed;
  const Generated g = generate(p);
  return normalize_instance(g.rg, g.jg);
}

void BM_Generate(benchmark::State& state) {
  GenParams p;
  p.n_total = static_cast<int>(state.range(0));
  for (auto _ : state) {
    p.seed++;
    benchmark::DoNotOptimize(generate(p));
  }
}
BENCHMARK(BM_Generate)->Arg(30)->Arg(100)->Arg(300);

void BM_Normalize(benchmark::State& state) {
  GenParams p;
  p.n_total = static_cast<int>(state.range(0));
  const Generated g = generate(p);
  for (auto _ : state) benchmark::DoNotOptimize(normalize_instance(g.rg, g.jg));
}
BENCHMARK(BM_Normalize)->Arg(30)->Arg(100)->Arg(300);

void BM_SolveLap(benchmark::State& state) {
  const Instance inst = instance_of(static_cast<int>(state.range(0)));
  const CostMatrix m = build_processing_matrix(inst);
  for (auto _ : state) benchmark::DoNotOptimize(solve_lap(m));
}
BENCHMARK(BM_SolveLap)->Arg(32)->Arg(64)->Arg(128)->Arg(256);

void BM_Lpcf(benchmark::State& state) {
  const Instance inst = instance_of(static_cast<int>(state.range(0)));
  SolverBudget budget;
  budget.node_limit = 200000;  // keeps giant orbits comparable across sizes
  for (auto _ : state) benchmark::DoNotOptimize(solve_lpcf(inst, budget));
}
BENCHMARK(BM_Lpcf)->Arg(10)->Arg(30)->Arg(100);

void BM_NocExhaustive(benchmark::State& state) {
  const Instance inst = instance_of(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_noc_exhaustive(inst));
}
BENCHMARK(BM_NocExhaustive)->Arg(6)->Arg(8)->Arg(9);

void BM_NocBranchAndBound(benchmark::State& state) {
  const Instance inst = instance_of(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_noc_bnb(inst));
}
BENCHMARK(BM_NocBranchAndBound)->Arg(6)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
