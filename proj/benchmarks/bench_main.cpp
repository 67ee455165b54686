#include <fjsa/homology.hpp>
#include <fjsa/lambda_ops.hpp>
#include <fjsa/solver.hpp>
#include <fjsa/tag.hpp>

#include <benchmark/benchmark.h>

namespace {

void BM_SolveE(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fjsa::solve_E(1, 1, order));
}
BENCHMARK(BM_SolveE)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_SolvePhiSystem(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fjsa::solve_phi_system(1, 1, order));
}
BENCHMARK(BM_SolvePhiSystem)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_LambdaAdjointLine(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fjsa::lambda_adjoint_line(fjsa::GDim(2, 3), 1, order));
}
BENCHMARK(BM_LambdaAdjointLine)->Arg(10)->Arg(30);

void BM_FreeJordan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fjsa::build_free_jordan(1, 1, n));
}
BENCHMARK(BM_FreeJordan)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_Tag(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto alg = fjsa::build_free_jordan(1, 1, n);
  const auto bs = fjsa::build_Bs(alg, n);
  for (auto _ : state) benchmark::DoNotOptimize(fjsa::build_tag(bs, n, false));
}
BENCHMARK(BM_Tag)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_Homology(benchmark::State& state) {
  const int d_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fjsa::compute_homology(0, 1, 3, d_max));
}
BENCHMARK(BM_Homology)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
