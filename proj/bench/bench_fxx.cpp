// Serial references against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include <vector>

#include "fxx/mc_oracle.hpp"
#include "fxx/single_barrier.hpp"

namespace {

using namespace fxx;
using enum OptionDirection;
using enum BarrierSide;
using enum KnockType;

const MarketEnvironment kEnv{100.0, 0.02, 0.01, 0.2, 0.5};

std::vector<Contract> mc_contracts() {
    return {VanillaSpec{Call, 100.0}, SingleBarrierSpec{Call, 100.0, 85.0, Lower, Out},
            DoubleBarrierSpec{Call, 100.0, 85.0, 115.0, Out}};
}

McConfig mc_config(benchmark::State& state) {
    McConfig cfg;
    cfg.n_paths = static_cast<std::uint64_t>(state.range(0));
    cfg.n_steps = 252;
    cfg.seed = 7;
    return cfg;
}

void BM_McSerial(benchmark::State& state) {
    const auto contracts = mc_contracts();
    const McConfig cfg = mc_config(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc_price_many_serial(kEnv, contracts, cfg));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * cfg.n_steps);
}

void BM_McParallel(benchmark::State& state) {
    const auto contracts = mc_contracts();
    const McConfig cfg = mc_config(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc_price_many(kEnv, contracts, cfg));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * cfg.n_steps);
}

std::vector<SingleBarrierJob> barrier_jobs(int n) {
    std::vector<SingleBarrierJob> jobs;
    jobs.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / n;
        const MarketEnvironment env{100.0, 0.03, 0.01, 0.1 + 0.3 * t, 0.25 + 1.5 * t};
        const bool up = i % 2 == 0;
        jobs.push_back({env, SingleBarrierSpec{(i % 4 < 2) ? Call : Put, 80.0 + 40.0 * t,
                                               up ? 130.0 : 75.0, up ? Upper : Lower,
                                               (i % 3 == 0) ? In : Out}});
    }
    return jobs;
}

void BM_BarrierBatchSerial(benchmark::State& state) {
    const auto jobs = barrier_jobs(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(price_single_barrier_batch_serial(jobs));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BarrierBatchParallel(benchmark::State& state) {
    const auto jobs = barrier_jobs(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(price_single_barrier_batch(jobs));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_McSerial)->Arg(1 << 14)->Arg(1 << 16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_McParallel)->Arg(1 << 14)->Arg(1 << 16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BarrierBatchSerial)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_BarrierBatchParallel)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
