#include <benchmark/benchmark.h>

// The distro's benchmark_main archive is built with a different LTO version.
BENCHMARK_MAIN();
