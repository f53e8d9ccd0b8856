#include <benchmark/benchmark.h>

#include <random>

#include "shearbq/energies.hpp"
#include "shearbq/fft.hpp"
#include "shearbq/modal_exact.hpp"
#include "shearbq/ode.hpp"
#include "shearbq/random_field.hpp"
#include "shearbq/solver.hpp"

using namespace shearbq;

namespace {

SimConfig bench_config(int n) {
    SimConfig cfg;
    cfg.params = Params{0.0, 1.0, 0.05, 0.05, 0.05, 0.05, 5};
    cfg.grid.nx = cfg.grid.ny = n;
    cfg.grid.delta_xi = 2.0 * M_PI / 8.0;
    cfg.dt = 0.05;
    cfg.ic.kind = IcSpec::Kind::BandRandom;
    cfg.ic.eps1 = 1e-3;
    cfg.ic.eps2 = 1e-6;
    cfg.ic.band = BandSpec{1, 1, 0, 2};
    cfg.ic.seed = 3;
    return cfg;
}

void bm_fft_roundtrip(benchmark::State& state) {
    const int n = int(state.range(0));
    Fft2D fft(n, n);
    std::mt19937_64 rng(1);
    SpectralField f =
        random_band_field(n, n, 0.5, BandSpec{1, n / 4, 0, n / 4}, 0, 1.0,
                          rng);
    std::vector<Complex> phys(f.size());
    for (auto _ : state) {
        fft.backward(f, phys.data());
        fft.forward(phys.data(), f);
        benchmark::DoNotOptimize(f.data());
    }
}
BENCHMARK(bm_fft_roundtrip)->Arg(64)->Arg(128)->Arg(256);

void bm_nonlinear_step(benchmark::State& state) {
    const int n = int(state.range(0));
    SimConfig cfg = bench_config(n);
    PseudoSpectral solver(cfg);
    SimState s = solver.initial_state();
    for (auto _ : state) {
        solver.step(s);
        benchmark::DoNotOptimize(s.omega.data());
    }
}
BENCHMARK(bm_nonlinear_step)->Arg(64)->Arg(128);

void bm_energy_report(benchmark::State& state) {
    const int n = int(state.range(0));
    std::mt19937_64 rng(2);
    SpectralField f =
        random_band_field(n, n, 0.5, BandSpec{1, n / 3, 0, n / 3}, 5, 1.0,
                          rng);
    f.set_frame_time(3.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(norm_grad_a_sq(f, 5, 1.0));
        benchmark::DoNotOptimize(norm_mdot_sq(f, 5, 1.0));
    }
}
BENCHMARK(bm_energy_report)->Arg(128);

void bm_duhamel_quadrature(benchmark::State& state) {
    Params p;
    p.beta = 1.0;
    p.nu_x = 0.1;
    p.nu_y = 0.4;
    p.eta_x = 0.2;
    p.eta_y = 0.05;
    const Mode m{2, 1.0};
    double t = 1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            exact_omega_duhamel(p, m, Complex{1.0, 0.0}, t));
        t = t < 30.0 ? t + 1.0 : 1.0;
    }
}
BENCHMARK(bm_duhamel_quadrature);

void bm_mode_integration(benchmark::State& state) {
    Params p{0.4, 1.0, 0.1, 0.2, 0.3, 0.1, 0};
    const Mode m{2, -1.0};
    const ModeState s0{Complex{1.0, 0.0}, Complex{0.0, 1.0}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            integrate_mode_final(p, m, s0, 0.0, 10.0, 1e-10));
    }
}
BENCHMARK(bm_mode_integration);

}  // namespace

BENCHMARK_MAIN();
