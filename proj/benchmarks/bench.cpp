#include <benchmark/benchmark.h>

#include <random>

#include "specnoise/floquet.hpp"
#include "specnoise/phase_space.hpp"
#include "specnoise/rmt.hpp"
#include "specnoise/spectral.hpp"
#include "specnoise/wigner.hpp"

using namespace specnoise;

namespace {

ModelParams small_model() {
    ModelParams p;
    p.E_b = 10.0;
    p.S = 0.5;
    return p;
}

}  // namespace

static void BM_PropagatePeriod(benchmark::State& state) {
    ModelParams p = small_model();
    Grid g = build_grid(p, 60.0, int(state.range(0)));
    const int slices = 256;
    for (auto _ : state) {
        UnitaryPropagator u = propagate_period(p, g, slices);
        benchmark::DoNotOptimize(u.matrix.data());
    }
    state.SetItemsProcessed(state.iterations() * slices);
}
BENCHMARK(BM_PropagatePeriod)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_Quasienergies(benchmark::State& state) {
    ModelParams p = small_model();
    Grid g = build_grid(p, 60.0, int(state.range(0)));
    UnitaryPropagator u = propagate_period(p, g, 256);
    for (auto _ : state) {
        FloquetModes m = quasienergies(u, p);
        benchmark::DoNotOptimize(m.spectrum.energies.data());
    }
}
BENCHMARK(BM_Quasienergies)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_PowerSpectrum(benchmark::State& state) {
    EnsembleSpec spec{EnsembleKind::Poisson, 1000, 50, 1};
    auto seqs = sample_levels(spec);
    std::vector<DeltaSeries> deltas;
    for (auto& s : seqs)
        deltas.push_back(delta_series(unfold(s, UnfoldMethod::Linear)));
    for (auto _ : state) {
        PowerSpectrum ps = power_spectrum_delta(deltas, 256, 0.5);
        benchmark::DoNotOptimize(ps.values.data());
    }
}
BENCHMARK(BM_PowerSpectrum)->Unit(benchmark::kMillisecond);

static void BM_PolynomialUnfold(benchmark::State& state) {
    EnsembleSpec spec{EnsembleKind::Poisson, 2000, 1, 2};
    auto levels = sample_levels(spec).front();
    for (auto _ : state) {
        UnfoldedSpectrum u = unfold(levels, UnfoldMethod::Polynomial, 7);
        benchmark::DoNotOptimize(u.levels.data());
    }
}
BENCHMARK(BM_PolynomialUnfold)->Unit(benchmark::kMillisecond);

static void BM_WignerRaster(benchmark::State& state) {
    const int n = int(state.range(0));
    Grid g{-10.0, 10.0, n, 1.0};
    VecC psi(n);
    for (int i = 0; i < n; ++i)
        psi[i] = std::exp(-g.q(i) * g.q(i) / 4.0);
    psi /= psi.norm();
    VecC fine = upsample_state(psi);
    MatC rho = fine * fine.adjoint();
    for (auto _ : state) {
        MatD w = wigner_raster(rho);
        benchmark::DoNotOptimize(w.data());
    }
}
BENCHMARK(BM_WignerRaster)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_ClassicalPeriodMap(benchmark::State& state) {
    ModelParams p;
    p.S = 2.5;
    const double dt = p.period() / 2048;
    double q = p.q_well() + 1.0, pp = 0.5;
    for (auto _ : state) {
        auto [q1, p1] = flow(p, q, pp, 0.0, p.period(), dt);
        benchmark::DoNotOptimize(q1 + p1);
    }
    state.SetItemsProcessed(state.iterations() * 2048);
}
BENCHMARK(BM_ClassicalPeriodMap)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
