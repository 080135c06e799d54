#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "bfn/burgers.hpp"
#include "bfn/norms.hpp"

using namespace bfn;

namespace {

constexpr double kPi = std::numbers::pi;

Field sin2pi(const Grid1D& g, double amp, double phase = 0.0) {
    return Field::sample(g, [amp, phase](double x) {
        return amp * std::sin(2 * kPi * x + phase);
    });
}

Trajectory observations(const Field& uobs0, double T, int nt) {
    return solve_inviscid_burgers(SweepDirection::Forward, Gain::constant(0.0),
                                  uobs0, nullptr, T, nt)
        .traj;
}

}  // namespace

TEST_CASE("gain-free transport keeps carried values exactly constant") {
    const Grid1D g(256, BoundaryKind::Periodic);
    const BurgersRun run = solve_inviscid_burgers(
        SweepDirection::Forward, Gain::constant(0.0), sin2pi(g, 0.2), nullptr, 0.5, 512);
    REQUIRE(run.curves.carried.has_value());
    const Array2D& c = *run.curves.carried;
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j)
            CHECK(c(i, j) == c(0, j));
}

TEST_CASE("gain-free run matches the implicit solution") {
    const Grid1D g(512, BoundaryKind::Periodic);
    const double T = 0.5;
    const BurgersRun run = solve_inviscid_burgers(
        SweepDirection::Forward, Gain::constant(0.0), sin2pi(g, 0.2), nullptr, T, 512);
    double worst = 0;
    for (int j = 0; j < g.n; ++j) {
        const double x = g.node(j);
        double u = 0.2 * std::sin(2 * kPi * x);
        for (int it = 0; it < 60; ++it) u = 0.2 * std::sin(2 * kPi * (x - u * T));
        worst = std::max(worst,
                         std::abs(run.traj.final().values[static_cast<size_t>(j)] - u));
    }
    CHECK(worst <= 1e-5);
}

TEST_CASE("full gain damps carried values at the exact rate") {
    const Grid1D g(256, BoundaryKind::Periodic);
    const Field u0 = sin2pi(g, 0.2);
    const BurgersRun run = solve_inviscid_burgers(
        SweepDirection::Forward, Gain::constant(1.0), u0, nullptr, 0.5, 512);
    const Array2D& c = *run.curves.carried;
    const auto last = c.rows() - 1;
    for (std::size_t j = 0; j < c.cols(); ++j)
        CHECK(std::abs(c(last, j) - u0.values[j] * std::exp(-0.5)) <= 1e-12);
}

TEST_CASE("shock horizon is refused up front") {
    const Grid1D g(256, BoundaryKind::Periodic);
    CHECK_THROWS_AS(solve_inviscid_burgers(SweepDirection::Forward, Gain::constant(1.0),
                                           sin2pi(g, 1.0), nullptr, 0.5, 128),
                    PreconditionError);
}

TEST_CASE("characteristic decay identity without observations") {
    const Grid1D g(256, BoundaryKind::Periodic);
    const Gain gain = Gain::constant(1.0);
    const BurgersRun run = solve_inviscid_burgers(SweepDirection::Forward, gain,
                                                  sin2pi(g, 0.2), nullptr, 0.5, 512);
    for (double d : proposition7_check(gain, run, nullptr)) CHECK(std::abs(d) <= 1e-12);
}

TEST_CASE("characteristic decay identity converges with observations") {
    const Gain gain = Gain::constant(1.0);

    // The deviation is dominated by resampling the observation snapshots at
    // curve positions, so it shrinks with the grid, not the step count.
    auto worst_dev = [&](int n) {
        const Grid1D g(n, BoundaryKind::Periodic);
        const Trajectory obs = observations(sin2pi(g, 0.1, 0.5), 0.5, 512);
        const BurgersRun run = solve_inviscid_burgers(SweepDirection::Forward, gain,
                                                      sin2pi(g, 0.2), &obs, 0.5, 512);
        double worst = 0;
        for (double d : proposition7_check(gain, run, &obs)) worst = std::max(worst, d);
        return worst;
    };
    const double coarse = worst_dev(128);
    const double fine = worst_dev(512);
    CHECK(coarse <= 2e-5);
    CHECK(fine <= 0.1 * coarse);
}

TEST_CASE("error norm bound holds for full and windowed gains") {
    const Grid1D g(256, BoundaryKind::Periodic);
    const Field u0 = sin2pi(g, 0.2);
    const Field uobs0 = sin2pi(g, 0.1, 0.5);
    const double T = 0.5;
    const int nt = 512;
    const Trajectory obs = observations(uobs0, T, nt);
    double M = 0;
    for (const Field& s : obs.snapshots) M = std::max(M, linf_grad(s));
    CHECK(M > 0.0);

    for (const Gain& gain : {Gain::constant(1.0), Gain::temporal(1.0, 0.1, 0.35)}) {
        const BurgersRun fwd =
            solve_inviscid_burgers(SweepDirection::Forward, gain, u0, &obs, T, nt);
        const BurgersRun bwd =
            reverse_inviscid_burgers(gain, fwd.traj.final(), &obs, T, nt);
        const auto pts = theorem6_bound_check(gain, fwd, bwd, &obs, M);
        CHECK(pts.size() > 10);
        for (const Theorem6Point& p : pts) {
            CHECK(p.satisfied);
            CHECK(p.lhs <= p.rhs);
        }
    }
}

TEST_CASE("norm bound checker rejects interval supports") {
    const Grid1D g(256, BoundaryKind::Periodic);
    const Gain gain = Gain::spatial(1.0, 0.0, 0.5);
    const BurgersRun fwd = solve_inviscid_burgers(SweepDirection::Forward, gain,
                                                  sin2pi(g, 0.2), nullptr, 0.5, 256);
    const BurgersRun bwd =
        reverse_inviscid_burgers(gain, fwd.traj.final(), nullptr, 0.5, 256);
    CHECK_THROWS_AS(theorem6_bound_check(gain, fwd, bwd, nullptr, 0.0),
                    PreconditionError);
}

TEST_CASE("viscous solver reproduces its own observations exactly") {
    const Grid1D g(256, BoundaryKind::Dirichlet);
    const Field uobs0 = Field::sample(g, [](double x) { return 0.1 * std::sin(kPi * x); });
    const Trajectory obs = solve_viscous_burgers_forward(Gain::constant(0.0), uobs0,
                                                         nullptr, 0.05, 0.3, 256);
    const Trajectory run = solve_viscous_burgers_forward(Gain::constant(1.0), uobs0,
                                                         &obs, 0.05, 0.3, 256);
    REQUIRE(run.snapshots.size() == obs.snapshots.size());
    for (std::size_t i = 0; i < run.snapshots.size(); ++i)
        CHECK(max_abs(run.snapshots[i] - obs.snapshots[i]) == 0.0);
}

TEST_CASE("viscous energy decays without a gain") {
    const Grid1D g(256, BoundaryKind::Dirichlet);
    const Field ic = Field::sample(g, [](double x) { return 0.3 * std::sin(kPi * x); });
    const Trajectory t =
        solve_viscous_burgers_forward(Gain::constant(0.0), ic, nullptr, 0.05, 0.5, 512, 64);
    for (std::size_t i = 0; i + 1 < t.snapshots.size(); ++i)
        CHECK(l2_norm(t.snapshots[i + 1]) < l2_norm(t.snapshots[i]));
}

TEST_CASE("explicit advection guards its CFL bound") {
    const Grid1D g(128, BoundaryKind::Dirichlet);
    const Field ic = Field::sample(g, [](double x) { return std::sin(kPi * x); });
    CHECK_THROWS_AS(
        solve_viscous_burgers_forward(Gain::constant(0.0), ic, nullptr, 0.05, 1.0, 8),
        StabilityError);
}

TEST_CASE("viscous solver agrees with the heat-substitution evolution") {
    const Grid1D g(512, BoundaryKind::Dirichlet);
    const Field ic = Field::sample(g, [](double x) { return 0.2 * std::sin(kPi * x); });
    const Trajectory t = solve_viscous_burgers_forward(Gain::constant(0.0), ic, nullptr,
                                                       0.05, 0.5, 2048, 2048);
    const Field exact = cole_hopf_evolve(ic, 0.05, 0.5, 511);
    CHECK(max_abs(t.final() - exact) <= 1e-4);
}

TEST_CASE("logarithmic substitution round trip") {
    const Grid1D g(512, BoundaryKind::Dirichlet);

    const Field zero = Field::zeros(g);
    const Field v0 = cole_hopf(zero, 0.05, ColeHopfDirection::ToHeat);
    for (double v : v0.values) CHECK(v == 1.0);

    const Field u = Field::sample(g, [](double x) { return 0.2 * std::sin(kPi * x); });
    const Field v = cole_hopf(u, 0.05, ColeHopfDirection::ToHeat);
    CHECK(v.grid.bc == BoundaryKind::Neumann);
    for (double x : v.values) CHECK(x > 0.0);
    const Field back = cole_hopf(v, 0.05, ColeHopfDirection::FromHeat);
    CHECK(back.grid.bc == BoundaryKind::Dirichlet);
    CHECK(max_abs(back - u) <= 1e-8);
}

TEST_CASE("negative heat-side values are rejected") {
    const Grid1D g(64, BoundaryKind::Neumann);
    std::vector<double> v(64, 1.0);
    v[30] = -0.5;
    CHECK_THROWS_AS(cole_hopf(Field(g, v, 0.0), 0.05, ColeHopfDirection::FromHeat),
                    PositivityError);
}

TEST_CASE("gain-free viscous round trip is well conditioned") {
    const Grid1D g(128, BoundaryKind::Dirichlet);
    const Field ic = Field::sample(g, [](double x) { return 0.2 * std::sin(kPi * x); });
    CHECK(k0_wellposedness_check(ic, 0.05, 0.5, 32, 300.0) <= 1e-6);
    CHECK_THROWS_AS(k0_wellposedness_check(ic, 1.0, 1.0, 32, 300.0), TruncationError);
}

TEST_CASE("modal growth sequence") {
    auto coeffs = [](int N) {
        std::vector<std::complex<double>> a(static_cast<std::size_t>(N));
        for (int n = 1; n <= N; ++n)
            a[static_cast<std::size_t>(n - 1)] = 1.0 / (static_cast<double>(n) * n);
        return a;
    };

    SUBCASE("zero gain annihilates every coefficient") {
        const BnSequence seq = bn_sequence(coeffs(16), 0.0, 0.0, 1.0, 1.0);
        for (const LogComplex& b : seq.b) CHECK(std::exp(b.log_abs) == 0.0);
        for (double gn : seq.growth) CHECK(std::isinf(gn));
    }

    SUBCASE("two-mode case against the closed form") {
        const BnSequence seq = bn_sequence(coeffs(2), 1.0, 1.0, 1.0, 1.0);
        const double pref = std::expm1(-4.0);
        const double eb[3] = {pref * (std::exp(5.0) - 1.0) / 5.0,
                              pref * 0.5 * (std::exp(7.0) - 1.0) / 7.0,
                              pref * 0.0625 * (std::exp(11.0) - 1.0) / 11.0};
        const double eu[3] = {pref * std::exp(5.0) / 5.0,
                              pref * 0.5 * std::exp(7.0) / 7.0,
                              pref * 0.0625 * std::exp(11.0) / 11.0};
        for (int i = 0; i < 3; ++i) {
            const auto idx = static_cast<std::size_t>(i);
            CHECK(std::abs(seq.b[idx].to_complex().real() - eb[i]) <=
                  1e-12 * std::max(1.0, std::abs(eb[i])));
            CHECK(std::abs(seq.b[idx].to_complex().imag()) <=
                  1e-12 * std::max(1.0, std::abs(eb[i])));
            CHECK(std::abs(seq.b_under[idx].to_complex().real() - eu[i]) <=
                  1e-12 * std::max(1.0, std::abs(eu[i])));
        }
    }

    SUBCASE("viscosity drives the super-polynomial growth") {
        const BnSequence visc = bn_sequence(coeffs(128), 1.0, 1.0, 1.0, 1.0);
        double max_g = -1e300;
        for (double gn : visc.growth) max_g = std::max(max_g, gn);
        CHECK(max_g >= 0.4);

        const BnSequence invisc = bn_sequence(coeffs(64), 1.0, 1.0, 0.0, 1.0);
        CHECK(invisc.growth.back() <= 0.01);
    }

    SUBCASE("input validation") {
        CHECK_THROWS_AS(bn_sequence({}, 1.0, 1.0, 1.0, 1.0), PreconditionError);
        CHECK_THROWS_AS(bn_sequence(coeffs(4), -1.0, 1.0, 1.0, 1.0), PreconditionError);
        CHECK_THROWS_AS(bn_sequence(coeffs(4), 1.0, 1.0, 1.0, 0.0), PreconditionError);
    }
}
