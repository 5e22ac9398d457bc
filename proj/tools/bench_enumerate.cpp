// Serial vs OpenMP vs paranoid enumeration kernels.
#include "cuspidal/enumerator.hpp"

#include <benchmark/benchmark.h>

namespace {

void run(benchmark::State& state, cusp::SearchMode mode, cusp::Kernel kernel) {
    cusp::SearchConfig c;
    c.degree = state.range(0);
    c.pair_count = static_cast<int>(state.range(1));
    c.mode = mode;
    c.kernel = kernel;
    size_t found = 0;
    for (auto _ : state) {
        auto out = cusp::enumerate_newton(c);
        found = out.size();
        benchmark::DoNotOptimize(out);
    }
    state.counters["survivors"] = static_cast<double>(found);
}

void BM_Serial(benchmark::State& s) { run(s, cusp::SearchMode::pruned, cusp::Kernel::serial); }
void BM_OpenMP(benchmark::State& s) { run(s, cusp::SearchMode::pruned, cusp::Kernel::openmp); }
void BM_ParanoidSerial(benchmark::State& s) { run(s, cusp::SearchMode::paranoid, cusp::Kernel::serial); }
void BM_ParanoidOpenMP(benchmark::State& s) { run(s, cusp::SearchMode::paranoid, cusp::Kernel::openmp); }

void pruned_args(benchmark::internal::Benchmark* b) {
    for (int d : {12, 20, 30, 60}) b->Args({d, 1})->Args({d, 2})->Args({d, 3});
    b->Args({120, 1})->Args({120, 2})->Args({30, 4})->Args({60, 4});
    b->Unit(benchmark::kMillisecond);
}

// the full scan is only feasible for small degrees
void paranoid_args(benchmark::internal::Benchmark* b) {
    for (int d : {8, 12, 14}) b->Args({d, 1})->Args({d, 2});
    b->Args({12, 3});
    b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_Serial)->Apply(pruned_args);
BENCHMARK(BM_OpenMP)->Apply(pruned_args);
BENCHMARK(BM_ParanoidSerial)->Apply(paranoid_args);
BENCHMARK(BM_ParanoidOpenMP)->Apply(paranoid_args);

BENCHMARK_MAIN();
