#include <benchmark/benchmark.h>

#include <cobord/actions.hpp>
#include <cobord/bounds.hpp>
#include <cobord/lazard.hpp>

using namespace cobord;

namespace {

void BM_FglConstruction(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(Fgl(n));
}
BENCHMARK(BM_FglConstruction)->DenseRange(6, 12, 3)->Unit(benchmark::kMillisecond);

void BM_NSeries(benchmark::State& state)
{
    const Fgl f(static_cast<int>(state.range(1)));
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(f.n_series(k));
}
BENCHMARK(BM_NSeries)->Args({2, 8})->Args({3, 8})->Args({4, 10})->Args({8, 10})->Unit(benchmark::kMillisecond);

void BM_LazardContext(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const Lazard L(n);
        benchmark::DoNotOptimize(L.base_basis());
    }
}
BENCHMARK(BM_LazardContext)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

const Lazard& context()
{
    static const Lazard L(kDefaultTruncation);
    return L;
}

void BM_EvaluateMilnor(benchmark::State& state)
{
    const Lazard L(kDefaultTruncation);
    const VarietyExpr e = VarietyExpr::milnor(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(L.geometry().evaluate(e));
}
BENCHMARK(BM_EvaluateMilnor)->Args({2, 4})->Args({4, 6})->Args({5, 7})->Unit(benchmark::kMicrosecond);

void BM_ToGenCoords(benchmark::State& state)
{
    const Lazard& L = context();
    const CobordismClass z = L.geometry().evaluate(VarietyExpr::hyp(3, static_cast<int>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(L.to_gen_coords(z));
}
BENCHMARK(BM_ToGenCoords)->DenseRange(4, 12, 4)->Unit(benchmark::kMicrosecond);

void BM_FixedDimBound(benchmark::State& state)
{
    const Lazard& L = context();
    const GroupDescriptor g(2, {1});
    const CobordismClass z = L.geometry().evaluate(VarietyExpr::hyp(3, static_cast<int>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(fixed_dim_lower_bound(L, z, g));
}
BENCHMARK(BM_FixedDimBound)->DenseRange(4, 12, 4)->Unit(benchmark::kMicrosecond);

void BM_FiltrationFamily(benchmark::State& state)
{
    const Lazard& L = context();
    const GroupDescriptor g(2, {1});
    for (auto _ : state)
        benchmark::DoNotOptimize(filtration_family(L, static_cast<int>(state.range(0)), g, 8));
}
BENCHMARK(BM_FiltrationFamily)->DenseRange(0, 2, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
