#include <mor/doppler.hpp>
#include <mor/faddeeva.hpp>
#include <mor/lindblad.hpp>
#include <mor/polarimetry.hpp>
#include <mor/susceptibility.hpp>

#include <benchmark/benchmark.h>

namespace {

mor::SystemParams switch_point()
{
    mor::SystemParams p;
    p.Omega = 50.0;
    p.G1 = 100.0;
    p.delta = 3.0;
    return p;
}

void BM_ChiClosed(benchmark::State& state)
{
    const mor::SystemParams p = switch_point();
    for (auto _ : state)
        benchmark::DoNotOptimize(mor::chi_closed(p));
}
BENCHMARK(BM_ChiClosed);

void BM_SteadyState(benchmark::State& state)
{
    mor::SystemParams p = switch_point();
    p.G2 = 20.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(mor::steady_state(p));
}
BENCHMARK(BM_SteadyState);

void BM_ChiNumeric(benchmark::State& state)
{
    const mor::SystemParams p = switch_point();
    for (auto _ : state)
        benchmark::DoNotOptimize(mor::chi_numeric(p));
}
BENCHMARK(BM_ChiNumeric);

void BM_Faddeeva(benchmark::State& state)
{
    const mor::Complex z(static_cast<double>(state.range(0)) / 10.0, 0.1);
    for (auto _ : state)
        benchmark::DoNotOptimize(mor::faddeeva_w(z));
}
BENCHMARK(BM_Faddeeva)->Arg(5)->Arg(50)->Arg(200);

void BM_DopplerAverage(benchmark::State& state)
{
    const mor::SystemParams p = switch_point();
    mor::DopplerConfig cfg;
    cfg.width = static_cast<double>(state.range(0));
    cfg.method = state.range(1) == 0 ? mor::QuadratureMethod::adaptive_simpson : mor::QuadratureMethod::gauss_hermite;
    for (auto _ : state)
        benchmark::DoNotOptimize(mor::doppler_average(p, cfg));
}
BENCHMARK(BM_DopplerAverage)->Args({10, 0})->Args({100, 0})->Args({10, 1});

void BM_Spectrum(benchmark::State& state)
{
    const mor::SystemParams p = switch_point();
    mor::DopplerConfig cfg;
    cfg.width = 50.0;
    const mor::DetuningGrid grid{-100.0, 100.0, static_cast<std::size_t>(state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(mor::spectrum(p, {300.0}, cfg, grid));
}
BENCHMARK(BM_Spectrum)->Arg(201)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
