#include <benchmark/benchmark.h>

#include "eginv/solver.hpp"

using namespace eginv;

namespace {

GeneratedInstance matrix_instance(int p) {
  return generate_random_instance(AlgebraInstance::triangular(p), 0, 7);
}

GeneratedInstance sequence_instance(int degree) {
  return generate_random_instance(AlgebraInstance::sequence(2, 2), degree, 7);
}

void BM_BuildR_Matrix(benchmark::State& state) {
  const auto gen = matrix_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_R(gen.data, 0));
}
BENCHMARK(BM_BuildR_Matrix)->Arg(4)->Arg(8)->Arg(16);

void BM_BuildR_Sequence(benchmark::State& state) {
  const auto gen = sequence_instance(static_cast<int>(state.range(0)));
  const int w = window_bound(gen.data);
  for (auto _ : state) benchmark::DoNotOptimize(build_R(gen.data, w));
}
BENCHMARK(BM_BuildR_Sequence)->Arg(4)->Arg(8)->Arg(16);

void BM_SolveGeneral_Matrix(benchmark::State& state) {
  const auto gen = matrix_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const SolveReport rep = solve_general(gen.data);
    benchmark::DoNotOptimize(rep.status);
  }
}
BENCHMARK(BM_SolveGeneral_Matrix)->Arg(4)->Arg(8)->Arg(16);

void BM_SolveGeneral_Sequence(benchmark::State& state) {
  const auto gen = sequence_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const SolveReport rep = solve_general(gen.data);
    benchmark::DoNotOptimize(rep.status);
  }
}
BENCHMARK(BM_SolveGeneral_Sequence)->Arg(2)->Arg(4)->Arg(8);

void BM_RecoverData(benchmark::State& state) {
  const auto gen = sequence_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(recover_data(gen.data.inst, gen.g));
}
BENCHMARK(BM_RecoverData)->Arg(4)->Arg(8);

void BM_OracleInverse(benchmark::State& state) {
  const auto gen = sequence_instance(static_cast<int>(state.range(0)));
  const BlockOperator omega = build_omega(gen.data.inst, gen.g, window_bound(gen.data));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_inverse(omega));
}
BENCHMARK(BM_OracleInverse)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
