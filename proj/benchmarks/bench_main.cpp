#include <benchmark/benchmark.h>

#include "dunklkg/cartesian.hpp"
#include "dunklkg/dunkl_operator.hpp"
#include "dunklkg/oracle.hpp"
#include "dunklkg/quadrature.hpp"
#include "dunklkg/specfun.hpp"

using namespace dunklkg;

namespace {

OscillatorConfig osc() {
    OscillatorConfig c;
    c.mass = 0.5;
    c.omega = 1.0;
    return c;
}

void bm_gauss_laguerre(benchmark::State& state) {
    const int npts = int(state.range(0));
    for (auto _ : state) {
        auto rule = specfun::gauss_laguerre(0.25, npts);
        benchmark::DoNotOptimize(rule.nodes.data());
    }
}
BENCHMARK(bm_gauss_laguerre)->Arg(16)->Arg(64)->Arg(128);

void bm_gauss_jacobi(benchmark::State& state) {
    const int npts = int(state.range(0));
    for (auto _ : state) {
        auto rule = specfun::gauss_jacobi(0.75, -0.25, npts);
        benchmark::DoNotOptimize(rule.nodes.data());
    }
}
BENCHMARK(bm_gauss_jacobi)->Arg(16)->Arg(64);

void bm_tridiagonal_smallest(benchmark::State& state) {
    const int n = int(state.range(0));
    auto t = oracle::discretize_sector_hamiltonian(0.5, -1, osc(), 12.0, n);
    for (auto _ : state) {
        auto ev = specfun::tridiagonal_smallest_eigenvalues(t, 6);
        benchmark::DoNotOptimize(ev.data());
    }
}
BENCHMARK(bm_tridiagonal_smallest)->Arg(800)->Arg(3200);

void bm_oracle_spectrum(benchmark::State& state) {
    oracle::GridSpec grid;
    grid.x_max = 10.0;
    grid.npts = int(state.range(0));
    grid.refinement_levels = 3;
    for (auto _ : state) {
        auto eig = oracle::oracle_eigenvalues_1d(0.5, -1, osc(), grid, 4);
        benchmark::DoNotOptimize(eig.values.data());
    }
}
BENCHMARK(bm_oracle_spectrum)->Arg(200)->Arg(800);

void bm_wavefunction_eval(benchmark::State& state) {
    Function1D psi = cartesian::wavefunction_1d(4, -1, 0.5, osc());
    double x = 0.3;
    for (auto _ : state) {
        double v = psi.value(x);
        benchmark::DoNotOptimize(v);
        x = x < 6.0 ? x + 1e-3 : 0.3;
    }
}
BENCHMARK(bm_wavefunction_eval);

void bm_weighted_inner_product(benchmark::State& state) {
    Function1D a = cartesian::wavefunction_1d(3, 1, 0.5, osc());
    Function1D b = cartesian::wavefunction_1d(5, 1, 0.5, osc());
    auto rule = dunkl_halfline_rule(0.5, 48);
    for (auto _ : state) {
        double v = dunkl_inner_product(a, b, 0.5, rule);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(bm_weighted_inner_product);

} // namespace

BENCHMARK_MAIN();
