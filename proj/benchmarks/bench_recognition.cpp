#include <benchmark/benchmark.h>

#include "nested2/c1p.hpp"
#include "nested2/generators.hpp"
#include "nested2/oracle.hpp"
#include "nested2/recognition.hpp"

using namespace nested2;

static void BM_TestC1P_TwoNestedInstance(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BinaryMatrix a = gen_random_two_nested(n, n, 42);
  for (auto _ : state) {
    auto r = test_c1p(a);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_TestC1P_TwoNestedInstance)->Arg(16)->Arg(64)->Arg(128);

static void BM_TestC1P_Reject(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const BinaryMatrix a = gen_tucker(TuckerFamily::m_i, k);
  for (auto _ : state) {
    auto r = test_c1p(a);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_TestC1P_Reject)->Arg(4)->Arg(10);

static void BM_BuildCrossingGraph(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BinaryMatrix a = gen_random_matrix(n, n, 0.3, 7);
  for (auto _ : state) {
    auto h = build_crossing_graph(a);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_BuildCrossingGraph)->Arg(32)->Arg(128);

static void BM_IsTwoNested_FamilyReject(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const BinaryMatrix a = gen_f2(k);
  for (auto _ : state) {
    auto r = is_two_nested(a);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_IsTwoNested_FamilyReject)->Arg(5)->Arg(21)->Arg(51);

static void BM_OracleC1P(benchmark::State& state) {
  const BinaryMatrix a = gen_random_matrix(6, static_cast<int>(state.range(0)), 0.5, 3);
  for (auto _ : state) {
    bool r = oracle_c1p(a);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_OracleC1P)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
