// Streaming-path benchmarks: per-prime cost of one full beta_j = 0 sweep.

#include <benchmark/benchmark.h>

#include "lcvanish/vanish.hpp"

namespace {

using namespace lcv;

Instance axes_instance(int n, u64 p, int i) {
    std::vector<IntPoly> f;
    for (int v = 1; v <= n; ++v)
        f.push_back(parse_int_poly("x" + std::to_string(v), n));
    return build_instance(f, n, p, i);
}

void BM_StreamedBetaTest(benchmark::State& state) {
    const u64 p = static_cast<u64>(state.range(0));
    Instance inst = axes_instance(2, p, 2);
    for (auto _ : state) {
        StreamCounters c;
        std::optional<Witness> w;
        benchmark::DoNotOptimize(beta_j_is_zero_streamed(inst, 1, c, w));
    }
}
BENCHMARK(BM_StreamedBetaTest)->Arg(2)->Arg(5)->Arg(13)->Arg(31);

void BM_BaselineKernelChain(benchmark::State& state) {
    const u64 p = static_cast<u64>(state.range(0));
    Instance inst = axes_instance(2, p, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(baseline_kernel_chain(inst, 4));
    }
}
BENCHMARK(BM_BaselineKernelChain)->Arg(2)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
