// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "bt1/catalog.hpp"
#include "bt1/family.hpp"
#include "bt1/kappa.hpp"
#include "bt1/kraft.hpp"
#include "bt1/polysys.hpp"

namespace {

void BM_ClassIndex(benchmark::State& state) {
  const int c = static_cast<int>(state.range(0));
  for (auto _ : state) {
    bt1::ClassIndex index(c, c, 2 * c);
    benchmark::DoNotOptimize(index.classes().size());
  }
}
BENCHMARK(BM_ClassIndex)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EnumeratePaths(benchmark::State& state) {
  const int c = static_cast<int>(state.range(0));
  const bt1::PairTable table(bt1::Bt1Datum(c, c, bt1::Permutation::cycle(2 * c)));
  for (auto _ : state) benchmark::DoNotOptimize(bt1::enumerate_paths(table).size());
}
BENCHMARK(BM_EnumeratePaths)->DenseRange(3, 6);

void BM_GenSystem(benchmark::State& state) {
  const int c = static_cast<int>(state.range(0));
  const bt1::PairTable table(bt1::Bt1Datum(c, c, bt1::Permutation::cycle(2 * c)));
  for (auto _ : state) benchmark::DoNotOptimize(bt1::gen_system(table, 2).equations.size());
}
BENCHMARK(BM_GenSystem)->DenseRange(3, 5);

void BM_Sweep(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bt1::sweep(3, 3, {2, 3, 5}, jobs, 8).size());
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_PRankSample(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bt1::family_sample(2, 4, 100, 1, true).mismatches);
}
BENCHMARK(BM_PRankSample)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
