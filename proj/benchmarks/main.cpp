#include <benchmark/benchmark.h>

// libbenchmark_main ships as LTO bytecode from another compiler build.
BENCHMARK_MAIN();
