#include <benchmark/benchmark.h>
#include "moea/types.hpp"
BENCHMARK_MAIN();
