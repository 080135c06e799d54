#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "bfn/characteristics.hpp"
#include "bfn/norms.hpp"

using namespace bfn;

namespace {

constexpr double kPi = std::numbers::pi;

ProfileVelocity uniform_speed(double c, int n = 64) {
    const Grid1D g(n, BoundaryKind::Periodic);
    return {g, std::vector<double>(static_cast<size_t>(n), c)};
}

ProfileVelocity speed_profile(const std::function<double(double)>& fn, int n = 64) {
    const Grid1D g(n, BoundaryKind::Periodic);
    std::vector<double> v(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) v[static_cast<size_t>(j)] = fn(g.node(j));
    return {g, std::move(v)};
}

}  // namespace

TEST_CASE("unit-speed curves translate exactly") {
    const CharField cf = trace(uniform_speed(1.0), {0.0, 0.3, 0.6}, 0.3, 64);
    CHECK(cf.times.front() == doctest::Approx(0.0));
    CHECK(cf.times.back() == doctest::Approx(0.3));
    for (int j = 0; j < cf.n_feet(); ++j) {
        const double expect = wrap01(cf.feet[static_cast<size_t>(j)] + 0.3);
        CHECK(std::abs(cf.position(static_cast<size_t>(cf.n_times() - 1),
                                   static_cast<size_t>(j)) -
                       expect) <= 1e-14);
    }
}

TEST_CASE("zero velocity keeps every curve at its foot") {
    const CharField cf = trace(uniform_speed(0.0), {0.1, 0.5}, 1.0, 16);
    for (int i = 0; i < cf.n_times(); ++i)
        for (int j = 0; j < cf.n_feet(); ++j)
            CHECK(cf.lifted(static_cast<size_t>(i), static_cast<size_t>(j)) ==
                  doctest::Approx(cf.feet[static_cast<size_t>(j)]));
}

TEST_CASE("variable-speed tracing converges under step refinement") {
    const auto vel = speed_profile([](double x) { return 2.0 + std::sin(2 * kPi * x); }, 256);
    const CharField coarse = trace(vel, {0.0}, 0.3, 64);
    const CharField fine = trace(vel, {0.0}, 0.3, 1024);
    const double pc = coarse.lifted(static_cast<size_t>(coarse.n_times() - 1), 0);
    const double pf = fine.lifted(static_cast<size_t>(fine.n_times() - 1), 0);
    CHECK(std::abs(pc - pf) <= 1e-6);
}

TEST_CASE("overshooting steps abort with a crossing error") {
    const auto vel = speed_profile([](double x) { return -50.0 * std::sin(2 * kPi * x); }, 64);
    std::vector<double> feet;
    for (int j = 0; j < 8; ++j) feet.push_back(j / 8.0);
    CHECK_THROWS_AS(trace(vel, feet, 1.0, 1), CrossingError);
}

TEST_CASE("chord occupation closed form") {
    CHECK(occupation_segment(0.2, 0.4, 0.1, 0.0, 0.5) == doctest::Approx(0.1));
    CHECK(occupation_segment(0.4, 0.6, 0.2, 0.0, 0.5) == doctest::Approx(0.1));
    CHECK(occupation_segment(0.9, 1.1, 0.2, 0.0, 0.5) == doctest::Approx(0.1));
    CHECK(occupation_segment(0.3, 0.1, 0.2, 0.0, 0.2) == doctest::Approx(0.1));
    CHECK(occupation_segment(0.3, 0.3, 0.5, 0.0, 0.5) == doctest::Approx(0.5));
    CHECK(occupation_segment(0.7, 0.7, 0.5, 0.0, 0.5) == 0.0);
    CHECK(occupation_segment(0.2, 0.4, 0.0, 0.0, 0.5) == 0.0);
    CHECK(occupation_segment(0.0, 2.0, 1.0, 0.0, 0.5) == doctest::Approx(0.5));
}

TEST_CASE("occupation times under unit transport") {
    const Grid1D g(64, BoundaryKind::Periodic);
    const Gain half = Gain::spatial(1.0, 0.0, 0.5);

    const CharField full_turn = trace(uniform_speed(1.0), g.nodes(), 1.0, 256);
    for (double c : chi(half, full_turn)) CHECK(std::abs(c - 0.5) <= 1e-12);

    const CharField quarter = trace(uniform_speed(1.0), {0.4, 0.75}, 0.25, 64);
    const std::vector<double> occ = chi(half, quarter);
    CHECK(std::abs(occ[0] - 0.1) <= 1e-12);
    CHECK(std::abs(occ[1]) <= 1e-15);

    for (double c : chi(Gain::constant(1.0), full_turn))
        CHECK(std::abs(c - 1.0) <= 1e-12);
}

TEST_CASE("temporal windows clip the occupation") {
    const CharField cf = trace(uniform_speed(1.0), {0.0, 0.5}, 1.0, 128);
    const Gain tw = Gain::temporal(1.0, 0.2, 0.3);
    for (double o : gain_occupation(tw, cf, 0.0, 1.0))
        CHECK(std::abs(o - 0.1) <= 1e-12);
    for (double o : gain_occupation(tw, cf, 0.0, 1.0, /*ignore_window=*/true))
        CHECK(std::abs(o - 1.0) <= 1e-12);
}

TEST_CASE("observability certificate flips past the covering time") {
    const Grid1D g(64, BoundaryKind::Periodic);
    const Gain half = Gain::spatial(1.0, 0.0, 0.5);

    const CharField at_half = trace(uniform_speed(1.0), g.nodes(), 0.5, 256);
    const ObservabilityCertificate c1 = observability_certificate(half, at_half, 2.0);
    CHECK_FALSE(c1.observable);
    CHECK(c1.m <= 1e-9);
    CHECK(std::isinf(c1.K_threshold));

    const CharField past = trace(uniform_speed(1.0), g.nodes(), 0.6, 256);
    const ObservabilityCertificate c2 = observability_certificate(half, past, 2.0);
    CHECK(c2.observable);
    CHECK(std::abs(c2.m - 0.1) <= 1e-9);
    CHECK(std::abs(c2.K_threshold - 2.0 * 0.6 / c2.m) <= 1e-9);
}

TEST_CASE("carried values use exact integrating factors") {
    const Grid1D g(64, BoundaryKind::Periodic);
    const Gain half = Gain::spatial(1.0, 0.0, 0.5);
    const CharField cf = trace(uniform_speed(1.0), g.nodes(), 1.0, 128);
    const std::vector<double> ch = chi(half, cf);
    const std::vector<double> ones(static_cast<size_t>(g.n), 1.0);

    const Array2D fwd = carry_along(half, SweepDirection::Forward, cf, ones);
    const Array2D bwd = carry_along(half, SweepDirection::Backward, cf, ones);
    const auto last = static_cast<size_t>(cf.n_times() - 1);
    for (size_t j = 0; j < ones.size(); ++j) {
        CHECK(std::abs(fwd(last, j) - std::exp(-ch[j])) <= 1e-12);
        CHECK(std::abs(bwd(0, j) - std::exp(-ch[j])) <= 1e-12);
    }
}

TEST_CASE("sweep pair reproduces the per-curve contraction") {
    const Grid1D g(64, BoundaryKind::Periodic);
    const CharField cf = trace(uniform_speed(1.0), g.nodes(), 0.8, 128);
    std::vector<double> w0(static_cast<size_t>(g.n));
    for (int j = 0; j < g.n; ++j)
        w0[static_cast<size_t>(j)] = 2.0 + std::sin(2 * kPi * g.node(j));

    for (const Gain& gain : {Gain::constant(1.0), Gain::spatial(1.0, 0.0, 0.5),
                             Gain::temporal(1.0, 0.2, 0.6)}) {
        const Array2D fwd = carry_along(gain, SweepDirection::Forward, cf, w0);
        const auto last = static_cast<size_t>(cf.n_times() - 1);
        std::vector<double> wT(static_cast<size_t>(g.n));
        for (size_t j = 0; j < wT.size(); ++j) wT[j] = fwd(last, j);
        const Array2D bwd = carry_along(gain, SweepDirection::Backward, cf, wT);
        const std::vector<double> oracle = theorem4_oracle(gain, cf, 0.0, 0.8);
        for (size_t j = 0; j < wT.size(); ++j)
            CHECK(std::abs(bwd(0, j) - oracle[j] * w0[j]) <= 1e-12);
    }
}

TEST_CASE("contraction exponent scales with kappa") {
    const Grid1D g(64, BoundaryKind::Periodic);
    const CharField cf = trace(uniform_speed(1.0), g.nodes(), 0.6, 128);
    const std::vector<double> o1 = theorem4_oracle(Gain::spatial(1.0, 0.0, 0.5), cf, 0.0, 0.6);
    const std::vector<double> o2 =
        theorem4_oracle(Gain::spatial(1.0, 0.0, 0.5, 2.0), cf, 0.0, 0.6);
    bool seen = false;
    for (size_t j = 0; j < o1.size(); ++j) {
        if (o1[j] >= 1.0) continue;
        seen = true;
        CHECK(std::abs(std::log(o2[j]) / std::log(o1[j]) - 1.5) <= 1e-9);
    }
    CHECK(seen);
}

TEST_CASE("constant gain oracle reduces to a scalar") {
    const CharField cf = trace(uniform_speed(1.0), {0.1, 0.6}, 1.0, 64);
    for (double o : theorem4_oracle(Gain::constant(1.0), cf, 0.25, 1.0))
        CHECK(std::abs(o - std::exp(-2.0 * 0.75)) <= 1e-12);
}

TEST_CASE("occupation is monotone and 1-Lipschitz in the horizon") {
    const Grid1D g(64, BoundaryKind::Periodic);
    const Gain half = Gain::spatial(1.0, 0.0, 0.5);
    const std::vector<double> a = chi(half, trace(uniform_speed(1.0), g.nodes(), 0.6, 128));
    const std::vector<double> b = chi(half, trace(uniform_speed(1.0), g.nodes(), 0.7, 128));
    for (size_t j = 0; j < a.size(); ++j) {
        CHECK(b[j] - a[j] >= -1e-12);
        CHECK(b[j] - a[j] <= 0.1 + 1e-12);
    }
}

TEST_CASE("occupation is translation equivariant") {
    const Grid1D g(64, BoundaryKind::Periodic);
    const CharField cf = trace(uniform_speed(1.0), g.nodes(), 0.4, 128);

    const std::vector<double> c1 = chi(Gain::spatial(1.0, 0.0, 0.5), cf);
    const std::vector<double> c2 = chi(Gain::spatial(1.0, 0.25, 0.75), cf);
    for (size_t j = 0; j < c1.size(); ++j)
        CHECK(std::abs(c1[j] - c2[(j + 16) % 64]) <= 1e-12);
}

TEST_CASE("gain-free transport resamples the translated profile") {
    const Grid1D g(512, BoundaryKind::Periodic);
    const Field u0 = Field::sample(g, [](double x) { return std::sin(2 * kPi * x); });
    const CharField cf = trace(ProfileVelocity{g, std::vector<double>(512, 1.0)},
                               g.nodes(), 0.3, 256);
    const Trajectory traj =
        solve_inviscid_linear(Gain::constant(0.0), SweepDirection::Forward, u0, nullptr, cf);
    const Field expect =
        Field::sample(g, [](double x) { return std::sin(2 * kPi * (x - 0.3)); }, 0.3);
    CHECK(max_abs(traj.final() - expect) <= 1e-5);
}

TEST_CASE("shock time of analytic profiles") {
    const Grid1D g(256, BoundaryKind::Periodic);
    const Field steep = Field::sample(g, [](double x) { return 0.2 * std::sin(2 * kPi * x); });
    CHECK(std::abs(shock_time(steep) - 1.0 / (2 * kPi * 0.2)) <= 1e-3);

    const Field flat = Field::sample(g, [](double) { return 0.3; });
    CHECK(std::isinf(shock_time(flat)));
}
