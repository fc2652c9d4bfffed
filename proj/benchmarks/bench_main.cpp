#include <benchmark/benchmark.h>

#include "wittforge/dieudonne.hpp"
#include "wittforge/display.hpp"
#include "wittforge/witt.hpp"

using namespace wittforge;

static void BM_witt_table(benchmark::State& state)
{
    const auto p = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(build_witt_table(p, 3));
}
BENCHMARK(BM_witt_table)->Arg(2)->Arg(3)->Arg(5);

static void BM_witt_mul(benchmark::State& state)
{
    auto k = ChainRing::galois(3, 2, 1);
    auto W = classical_witt(k, 3, static_cast<int>(state.range(0)));
    std::mt19937_64 rng(1);
    auto x = W.random(rng), y = W.random(rng);
    for (auto _ : state) benchmark::DoNotOptimize(W.mul(x, y));
}
BENCHMARK(BM_witt_mul)->DenseRange(2, 4);

static void BM_exterior_power(benchmark::State& state)
{
    auto R = std::make_shared<const CoeffRing>(ChainRing::galois(3, 1, 2), 1, 1);
    auto D = lubin_tate_module(R, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(exterior_power(D, 2));
}
BENCHMARK(BM_exterior_power)->DenseRange(2, 5);

static void BM_display_exterior(benchmark::State& state)
{
    auto R = std::make_shared<const CoeffRing>(ChainRing::galois(3, 1, 2), 1, 1);
    auto d = from_dieudonne(lubin_tate_module(R, static_cast<int>(state.range(0)))).display;
    for (auto _ : state) benchmark::DoNotOptimize(exterior_power(d, 2));
}
BENCHMARK(BM_display_exterior)->DenseRange(2, 4);

BENCHMARK_MAIN();
