#include <benchmark/benchmark.h>

#include "orbifrob/models.hpp"
#include "orbifrob/symprod.hpp"

using namespace orbifrob;

namespace {

FrobeniusAlgebra base_for(int which) { return which == 0 ? models::dual_numbers() : models::surface(); }

void BM_BuildReference(benchmark::State& state) {
  const SymmetricProduct sp(base_for(static_cast<int>(state.range(0))), static_cast<int>(state.range(1)));
  SymprodOptions options;
  options.jobs = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sp.build_reference(options));
}

void BM_BuildParallel(benchmark::State& state) {
  const SymmetricProduct sp(base_for(static_cast<int>(state.range(0))), static_cast<int>(state.range(1)));
  SymprodOptions options;
  options.jobs = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(sp.build(options));
}

void BM_Verify(benchmark::State& state) {
  const GFrobeniusAlgebra x = SymmetricProduct(base_for(static_cast<int>(state.range(0))),
                                               static_cast<int>(state.range(1)))
                                  .build();
  VerifyOptions options;
  options.jobs = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(verify_axioms(x, options));
}

}  // namespace

// args: base (0 dual numbers, 1 surface), n, threads
BENCHMARK(BM_BuildReference)->Args({0, 4, 1})->Args({1, 3, 1})->Args({1, 4, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildParallel)
    ->Args({0, 4, 1})->Args({0, 4, 0})
    ->Args({1, 3, 1})->Args({1, 3, 0})
    ->Args({1, 4, 1})->Args({1, 4, 0})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Verify)->Args({0, 4, 1})->Args({0, 4, 0})->Args({1, 3, 1})->Args({1, 3, 0})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
