#include <benchmark/benchmark.h>

#include "doob/doob.hpp"

namespace {

using doob::DoobParams;

void BM_CanonicalDecomposition(benchmark::State& state) {
  const auto codes = doob::collect_codes({DoobParams(1, 1), doob::Target::two_mds, doob::SearchMode::all, 1});
  std::size_t i = 0;
  for (auto _ : state) {
    const doob::TwoMdsCode m(codes[i]);
    benchmark::DoNotOptimize(doob::canonical_decomposition(m).k());
    i = (i + 1) % codes.size();
  }
}
BENCHMARK(BM_CanonicalDecomposition);

void BM_Classify(benchmark::State& state) {
  const auto codes = doob::collect_codes({DoobParams(2, 0), doob::Target::mds, doob::SearchMode::all, 1});
  std::size_t i = 0;
  for (auto _ : state) {
    const auto c = doob::classify(doob::MdsCode(codes[i]));
    benchmark::DoNotOptimize(c.semilinear());
    i = (i + 97) % codes.size();
  }
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMicrosecond);

void BM_TheoremOnD20(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(doob::verify_theorem_on(DoobParams(2, 0)).total);
}
BENCHMARK(BM_TheoremOnD20)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace
