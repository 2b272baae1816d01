// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include <random>

#include "mubs/kernels.hpp"

using namespace mubs;

namespace {

std::vector<FieldElement> random_indices(std::size_t n, std::size_t count) {
  std::mt19937_64 rng(7);
  std::vector<FieldElement> js;
  for (std::size_t i = 0; i < count; ++i) {
    FieldElement j(n);
    for (auto& l : j.limbs()) l = rng();
    if (n % 64) j.limbs().back() &= (std::uint64_t{1} << (n % 64)) - 1;
    js.push_back(std::move(j));
  }
  return js;
}

std::vector<ComplexMatrix> unitaries(std::size_t n) {
  const auto ctx = MubContext::for_qubits(n);
  std::vector<ComplexMatrix> us{ComplexMatrix::identity(ctx.basis_count())};
  for (std::uint64_t j = 0; j < ctx.basis_count(); ++j)
    us.push_back(apply_gatelist(emit_gates(build_circuit(ctx, ctx.index(j))), n));
  return us;
}

template <auto Kernel>
void BuildBatch(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto ctx = MubContext::for_qubits(n);
  const auto js = random_indices(n, 1000);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(ctx, js));
  state.SetItemsProcessed(state.iterations() * 1000);
}

template <auto Kernel>
void GateTotalsAll(benchmark::State& state) {
  const auto ctx = MubContext::for_qubits(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(ctx));
}

template <auto Kernel>
void PairwiseChm(benchmark::State& state) {
  const auto us = unitaries(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(us));
}

template <auto Kernel>
void OracleEquivalence(benchmark::State& state) {
  const auto ctx = MubContext::for_qubits(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(ctx));
}

void ContextBuild(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(MubContext::for_qubits(n));
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BuildBatch<kernels::serial::build_batch>)->Name("build_batch/serial")->Arg(64)->Arg(256);
BENCHMARK(BuildBatch<kernels::omp::build_batch>)->Name("build_batch/omp")->Arg(64)->Arg(256);
BENCHMARK(GateTotalsAll<kernels::serial::gate_totals_all>)->Name("gate_totals_all/serial")->Arg(12)->Arg(16);
BENCHMARK(GateTotalsAll<kernels::omp::gate_totals_all>)->Name("gate_totals_all/omp")->Arg(12)->Arg(16);
BENCHMARK(PairwiseChm<kernels::serial::pairwise_chm>)->Name("pairwise_chm/serial")->Arg(4)->Arg(5);
BENCHMARK(PairwiseChm<kernels::omp::pairwise_chm>)->Name("pairwise_chm/omp")->Arg(4)->Arg(5);
BENCHMARK(OracleEquivalence<kernels::serial::oracle_equivalence>)->Name("oracle_equivalence/serial")->Arg(5)->Arg(6);
BENCHMARK(OracleEquivalence<kernels::omp::oracle_equivalence>)->Name("oracle_equivalence/omp")->Arg(5)->Arg(6);
BENCHMARK(ContextBuild)->RangeMultiplier(2)->Range(64, 512)->Complexity(benchmark::oNCubed);
BENCHMARK_MAIN();
