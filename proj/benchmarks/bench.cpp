#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "bfn/burgers.hpp"
#include "bfn/characteristics.hpp"
#include "bfn/linear_pde.hpp"

using namespace bfn;

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

EquationSpec heat_spec() {
    EquationSpec spec;
    spec.nu = 0.01;
    spec.advection = ConstantAdvection{0.0};
    spec.bc = BoundaryKind::Dirichlet;
    spec.T = 1.0;
    return spec;
}

void BM_ModalSweep(benchmark::State& state) {
    const EquationSpec spec = heat_spec();
    const Grid1D g(256, BoundaryKind::Dirichlet);
    const Field ic = Field::sample(g, [](double x) { return std::sin(std::numbers::pi * x); });
    for (auto _ : state) {
        Trajectory t = solve_forward_linear(spec, Gain::constant(1.0),
                                            NudgeSign::Damping, ic, nullptr, 256, 256);
        benchmark::DoNotOptimize(t.final().values.data());
    }
}
BENCHMARK(BM_ModalSweep);

void BM_CrankNicolsonSweep(benchmark::State& state) {
    const EquationSpec spec = heat_spec();
    const Grid1D g(256, BoundaryKind::Dirichlet);
    const Field ic = Field::sample(g, [](double x) { return std::sin(std::numbers::pi * x); });
    const Gain gain = Gain::spatial(1.0, 0.0, 0.5);
    for (auto _ : state) {
        Trajectory t =
            solve_forward_linear(spec, gain, NudgeSign::Damping, ic, nullptr, 256, 256);
        benchmark::DoNotOptimize(t.final().values.data());
    }
}
BENCHMARK(BM_CrankNicolsonSweep);

void BM_TraceCurves(benchmark::State& state) {
    const Grid1D g(512, BoundaryKind::Periodic);
    ProfileVelocity vel{g, {}};
    vel.samples.resize(512);
    for (int j = 0; j < 512; ++j) vel.samples[static_cast<size_t>(j)] = 2.0 + std::sin(kTau * g.node(j));
    std::vector<double> feet(512);
    for (int j = 0; j < 512; ++j) feet[static_cast<size_t>(j)] = g.node(j);
    for (auto _ : state) {
        CharField cf = trace(vel, feet, 1.0, 2048);
        benchmark::DoNotOptimize(cf.lifted(0, 0));
    }
}
BENCHMARK(BM_TraceCurves);

void BM_SelfAdvectingSweep(benchmark::State& state) {
    const Grid1D g(256, BoundaryKind::Periodic);
    const Field ic = Field::sample(g, [](double x) { return 0.2 * std::sin(kTau * x); });
    const Gain gain = Gain::constant(1.0);
    for (auto _ : state) {
        BurgersRun run = solve_inviscid_burgers(SweepDirection::Forward, gain, ic,
                                                nullptr, 0.5, 512);
        benchmark::DoNotOptimize(run.traj.final().values.data());
    }
}
BENCHMARK(BM_SelfAdvectingSweep);

void BM_ViscousSelfAdvectingSweep(benchmark::State& state) {
    const Grid1D g(256, BoundaryKind::Dirichlet);
    const Field ic = Field::sample(g, [](double x) { return 0.2 * std::sin(std::numbers::pi * x); });
    for (auto _ : state) {
        Trajectory t = solve_viscous_burgers_forward(Gain::constant(0.0), ic, nullptr,
                                                     0.05, 0.3, 256, 256);
        benchmark::DoNotOptimize(t.final().values.data());
    }
}
BENCHMARK(BM_ViscousSelfAdvectingSweep);

void BM_BackwardCoefficients(benchmark::State& state) {
    std::vector<std::complex<double>> a(128);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double n = static_cast<double>(i + 1);
        a[i] = {1.0 / (n * n), 0.0};
    }
    for (auto _ : state) {
        BnSequence seq = bn_sequence(a, 1.0, 1.0, 1.0, 1.0);
        benchmark::DoNotOptimize(seq.growth.data());
    }
}
BENCHMARK(BM_BackwardCoefficients);

}  // namespace

BENCHMARK_MAIN();
