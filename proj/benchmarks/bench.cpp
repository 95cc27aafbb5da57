#include <benchmark/benchmark.h>

#include "dcheb/asymptotic.hpp"
#include "dcheb/exact.hpp"
#include "dcheb/harness.hpp"
#include "dcheb/specfun.hpp"

using namespace dcheb;

static void BM_ExactSeries(benchmark::State& st) {
    const PolyTriple p{st.range(0), st.range(0) / 2 + 3, 4 * st.range(0)};
    for (auto _ : st) benchmark::DoNotOptimize(eval_exact_series(p));
    st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_ExactSeries)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void BM_ExactRecurrence(benchmark::State& st) {
    const PolyTriple p{st.range(0), st.range(0) / 2 + 3, 4 * st.range(0)};
    for (auto _ : st) benchmark::DoNotOptimize(eval_exact_recurrence(p));
}
BENCHMARK(BM_ExactRecurrence)->RangeMultiplier(4)->Range(16, 1024);

static void BM_Approximate(benchmark::State& st) {
    const Regime r = static_cast<Regime>(st.range(0));
    const PolyTriple p = calibration_point(r);
    st.SetLabel(std::string(regime_name(r)));
    for (auto _ : st) benchmark::DoNotOptimize(approximate(p, Thresholds{}, {r}));
}
BENCHMARK(BM_Approximate)
    ->Arg(static_cast<int>(Regime::KummerSmallB))
    ->Arg(static_cast<int>(Regime::AirySmallB))
    ->Arg(static_cast<int>(Regime::BesselSmallB))
    ->Arg(static_cast<int>(Regime::GammaNegSmallB))
    ->Arg(static_cast<int>(Regime::KummerFixedB));

static void BM_Airy(benchmark::State& st) {
    const double z = static_cast<double>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(airy(z));
}
BENCHMARK(BM_Airy)->Arg(-20)->Arg(-5)->Arg(3)->Arg(20);

static void BM_Bessel(benchmark::State& st) {
    const double z = static_cast<double>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(bessel_j01(z));
}
BENCHMARK(BM_Bessel)->Arg(2)->Arg(20)->Arg(200);

static void BM_Kummer(benchmark::State& st) {
    const double z = -static_cast<double>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(kummer_reg(6.0, z));
}
BENCHMARK(BM_Kummer)->Arg(10)->Arg(100)->Arg(1000);

static void BM_Sweep(benchmark::State& st) {
    const SweepSpec s = canonical_path("bessel");
    for (auto _ : st) benchmark::DoNotOptimize(sweep(s, 1));
}
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
