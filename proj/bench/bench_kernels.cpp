// Serial reference against OpenMP paths for the three parallel kernels.

#include <benchmark/benchmark.h>

#include "tgd/estimate.hpp"
#include "tgd/kernels.hpp"
#include "tgd/sample.hpp"

namespace {

using tgd::Params;
using tgd::kernels::Execution;

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::Parallel : Execution::Serial; }

void BM_Table(benchmark::State& state) {
    const Params p(0.95, -0.6);
    const auto exec = mode(state);
    for (auto _ : state) benchmark::DoNotOptimize(tgd::kernels::evaluate_table(p, state.range(1), exec));
    state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_Table)->ArgsProduct({{0, 1}, {1 << 12, 1 << 18}});

void BM_SampleChunked(benchmark::State& state) {
    const Params p(0.7, 0.4);
    const auto exec = mode(state);
    const auto method = state.range(1) ? tgd::SampleMethod::Bridge : tgd::SampleMethod::Inverse;
    for (auto _ : state) benchmark::DoNotOptimize(tgd::kernels::sample_chunked(p, 1 << 20, 17, method, exec));
    state.SetItemsProcessed(state.iterations() * (1 << 20));
}
BENCHMARK(BM_SampleChunked)->ArgsProduct({{0, 1}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_FitMle(benchmark::State& state) {
    const auto batch = tgd::sample_many(Params(0.6, -0.5), 100000, 5, tgd::SampleMethod::Inverse);
    const auto data = tgd::Dataset::from_values(batch.values);
    const tgd::FitOptions options{state.range(0) != 0};
    for (auto _ : state) benchmark::DoNotOptimize(tgd::fit_mle(data, options));
}
BENCHMARK(BM_FitMle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
