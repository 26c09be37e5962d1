#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "bandedge/band_edge.hpp"
#include "bandedge/dynamics.hpp"
#include "bandedge/entanglement.hpp"
#include "bandedge/oracle_bath.hpp"

namespace {

void BM_ComputeRoots(benchmark::State& state) {
    double d = -10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bandedge::compute_roots(d));
        d += 0.1;
        if (d > 10.0) d = -10.0;
        if (std::abs(d - bandedge::kDegenerateDetuning) < 1e-2) d += 0.05;
    }
}
BENCHMARK(BM_ComputeRoots);

void BM_Erfcx(benchmark::State& state) {
    std::complex<double> z(0.3, 0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bandedge::erfcx_scaled(z));
        z *= std::complex<double>(1.001, 0.0003);
        if (std::abs(z) > 40.0) z = {0.3, 0.1};
    }
}
BENCHMARK(BM_Erfcx);

void BM_AmplitudeQ(benchmark::State& state) {
    const auto roots = bandedge::compute_roots(-1.0);
    double tau = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bandedge::amplitude_q(roots, tau));
        tau += 0.01;
        if (tau > 50.0) tau = 0.0;
    }
}
BENCHMARK(BM_AmplitudeQ);

void BM_AmplitudeSeries1001(benchmark::State& state) {
    std::vector<double> grid;
    for (int i = 0; i <= 1000; ++i) grid.push_back(0.01 * i);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bandedge::amplitude_series(-4.0, grid));
    }
}
BENCHMARK(BM_AmplitudeSeries1001);

void BM_EvolveTwoQubit(benchmark::State& state) {
    const auto roots = bandedge::compute_roots(-2.5);
    const auto rho0 = bandedge::build_bell_like(
        {bandedge::BellFamily::Phi, 0.6, 0.4});
    double tau = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bandedge::evolve_two_qubit(rho0, roots, tau));
        tau += 0.05;
        if (tau > 20.0) tau = 0.0;
    }
}
BENCHMARK(BM_EvolveTwoQubit);

void BM_Concurrence(benchmark::State& state) {
    const auto roots = bandedge::compute_roots(-2.5);
    const auto rho = bandedge::evolve_two_qubit(
        bandedge::build_bell_like({bandedge::BellFamily::Psi, 0.55, 1.2}),
        roots, 3.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bandedge::concurrence(rho));
    }
}
BENCHMARK(BM_Concurrence);

void BM_BathEigensystem(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto bath = bandedge::discretize_bath(
        -1.0, n, 400.0, bandedge::BathGrid::SqrtStretched);
    for (auto _ : state) {
        bandedge::BathEigensystem eigensystem(bath);
        benchmark::DoNotOptimize(eigensystem.amplitude(10.0));
    }
}
BENCHMARK(BM_BathEigensystem)->Arg(250)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
