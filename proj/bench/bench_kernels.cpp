// Microbenchmarks for the hot paths: closed-form assembly, profile
// tabulation (serial vs OpenMP), schedule sweeps (serial vs OpenMP) and the
// banded finite-difference solve.  Parallel kernels are compared against
// their serial reference implementations at identical work sizes.

#include "pzt/bcp.hpp"
#include "pzt/fd_oracle.hpp"
#include "pzt/quasistatic.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

// A representative poled-ceramic parameter set; values hard-coded so the
// benchmark binary has no data-file dependency.
pzt::Material sample_material()
{
    pzt::Material m;
    m.c11 = 1.26e11;
    m.c12 = 7.95e10;
    m.c13 = 8.41e10;
    m.c33 = 1.17e11;
    m.c44 = 2.3e10;
    m.c66 = 2.325e10;
    m.e15 = 17.0;
    m.e31 = -6.5;
    m.e33 = 23.3;
    m.eps11 = 1.505e-8;
    m.eps33 = 1.302e-8;
    m.omega1 = 3e-4;
    m.omega2 = 3e-4;
    m.omega3 = 5e-4;
    m.beta1 = 1.97e6;
    m.beta2 = 1.97e6;
    m.beta3 = 1.42e6;
    m.kappa11 = 1.1;
    m.kappa33 = 1.3;
    m.kappaE11 = 2e-4;
    m.kappaE33 = 1.5e-4;
    m.theta0 = 296.0;
    m.rho0 = 7500.0;
    return m;
}

pzt::ProblemSpec sample_spec()
{
    pzt::ProblemSpec spec;
    spec.material = sample_material();
    spec.orientation = pzt::Orientation::thickness3;
    spec.variant = pzt::Variant::potential;
    spec.h = 0.01;
    spec.data.Tbar = 10.0;
    spec.data.phibar = 50.0;
    spec.data.tbar1 = 1e4;
    spec.data.qbar = 100.0;
    spec.data.phibar2 = -25.0;
    return spec;
}

pzt::Schedule sample_schedule()
{
    pzt::Schedule s;
    s.samples.resize(5);
    for (std::size_t i = 0; i < 5; ++i) {
        const double w = static_cast<double>(i) / 4.0;
        s.samples[i].tau = w;
        s.samples[i].data = sample_spec().data;
        s.samples[i].data.Tbar = 10.0 * w;
        s.samples[i].data.phibar2 = -25.0 * w;
    }
    return s;
}

void BM_assemble(benchmark::State& state)
{
    const pzt::ProblemSpec spec = sample_spec();
    for (auto _ : state) {
        pzt::PanelSolution sol = pzt::solve_panel(spec);
        benchmark::DoNotOptimize(sol.coeffs.U32);
    }
}
BENCHMARK(BM_assemble);

void BM_tabulate(benchmark::State& state)
{
    const pzt::PanelSolution sol = pzt::solve_panel(sample_spec());
    const int samples = static_cast<int>(state.range(0));
    const auto exec = state.range(1) != 0 ? pzt::Exec::parallel : pzt::Exec::serial;
    for (auto _ : state) {
        const auto rows = pzt::tabulate(sol, samples, exec);
        benchmark::DoNotOptimize(rows.data());
    }
    state.SetItemsProcessed(state.iterations() * samples);
}
BENCHMARK(BM_tabulate)
    ->ArgNames({"samples", "parallel"})
    ->Args({200001, 0})
    ->Args({200001, 1})
    ->UseRealTime();

void BM_sweep(benchmark::State& state)
{
    const pzt::ProblemSpec spec = sample_spec();
    const pzt::Schedule schedule = sample_schedule();
    const int instants = static_cast<int>(state.range(0));
    const auto exec = state.range(1) != 0 ? pzt::Exec::parallel : pzt::Exec::serial;
    std::vector<double> times(static_cast<std::size_t>(instants));
    for (int i = 0; i < instants; ++i)
        times[static_cast<std::size_t>(i)] = static_cast<double>(i) / (instants - 1);
    for (auto _ : state) {
        const auto entries = pzt::sweep(spec, schedule, times, exec);
        benchmark::DoNotOptimize(entries.data());
    }
    state.SetItemsProcessed(state.iterations() * instants);
}
BENCHMARK(BM_sweep)
    ->ArgNames({"instants", "parallel"})
    ->Args({256, 0})
    ->Args({256, 1})
    ->UseRealTime();

void BM_solve_fd(benchmark::State& state)
{
    const pzt::ProblemSpec spec = sample_spec();
    const pzt::Grid grid{static_cast<int>(state.range(0)), spec.h};
    for (auto _ : state) {
        pzt::DiscreteSolution sol = pzt::solve_fd(spec, grid);
        benchmark::DoNotOptimize(sol.residual_norm);
    }
}
BENCHMARK(BM_solve_fd)->Arg(512)->Arg(4096);

} // namespace

BENCHMARK_MAIN();
