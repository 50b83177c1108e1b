#include <benchmark/benchmark.h>

#include "doob/doob.hpp"

namespace {

using doob::DoobParams;
using doob::SearchMode;
using doob::Target;

void BM_CountMds(benchmark::State& state) {
  const DoobParams p(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(doob::count_codes({p, Target::mds, SearchMode::count_only, 1}));
  }
}
BENCHMARK(BM_CountMds)->Args({1, 0})->Args({1, 1})->Args({0, 3})->Args({2, 0})->Unit(benchmark::kMillisecond);

void BM_CountTwoMds(benchmark::State& state) {
  const DoobParams p(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(doob::count_codes({p, Target::two_mds, SearchMode::count_only, 1}));
  }
}
BENCHMARK(BM_CountTwoMds)->Args({1, 0})->Args({1, 1})->Args({0, 3})->Unit(benchmark::kMillisecond);

void BM_ClassesOfD11(benchmark::State& state) {
  for (auto _ : state) {
    const auto r = doob::run_search({DoobParams(1, 1), Target::mds, SearchMode::up_to_equivalence, 1});
    benchmark::DoNotOptimize(r.classes->class_count());
  }
}
BENCHMARK(BM_ClassesOfD11)->Unit(benchmark::kMillisecond);

}  // namespace
