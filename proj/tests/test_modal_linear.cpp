#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bfn/linear_pde.hpp"
#include "bfn/norms.hpp"

using namespace bfn;

namespace {

constexpr double kPi = std::numbers::pi;

EquationSpec heat_spec(double nu, double T) {
    EquationSpec s;
    s.nu = nu;
    s.advection = ConstantAdvection{0.0};
    s.bc = BoundaryKind::Dirichlet;
    s.T = T;
    return s;
}

Field mode1(const Grid1D& g, double amp) {
    return Field::sample(g, [amp](double x) { return amp * std::sin(kPi * x); });
}

}  // namespace

TEST_CASE("modal path matches the exact damped heat factor") {
    const Grid1D g(64, BoundaryKind::Dirichlet);
    const EquationSpec spec = heat_spec(0.01, 1.0);
    const Trajectory traj = solve_forward_linear(spec, Gain::constant(1.0),
                                                 NudgeSign::Damping, mode1(g, 1.0),
                                                 nullptr, 16);
    const double factor = std::exp(-(0.01 * kPi * kPi + 1.0));
    CHECK(max_abs(traj.final() - mode1(g, factor)) <= 1e-12);
    CHECK(traj.t_begin() == doctest::Approx(0.0));
    CHECK(traj.t_end() == doctest::Approx(1.0));
}

TEST_CASE("temporal window multiplies in only its overlap") {
    const Grid1D g(64, BoundaryKind::Dirichlet);
    const EquationSpec spec = heat_spec(0.01, 1.0);
    const Trajectory traj =
        solve_forward_linear(spec, Gain::temporal(1.0, 0.25, 0.75),
                             NudgeSign::Damping, mode1(g, 1.0), nullptr, 64);
    const double factor = std::exp(-0.01 * kPi * kPi - 0.5);
    CHECK(max_abs(traj.final() - mode1(g, factor)) <= 1e-12);
}

TEST_CASE("anti-damping folds kappa into the growth rate") {
    const Grid1D g(64, BoundaryKind::Dirichlet);
    const EquationSpec spec = heat_spec(0.01, 0.5);
    const Trajectory traj =
        solve_forward_linear(spec, Gain::constant(1.0, 2.0), NudgeSign::AntiDamping,
                             mode1(g, 1.0), nullptr, 32);
    const double factor = std::exp(-0.01 * kPi * kPi * 0.5 + 2.0 * 0.5);
    CHECK(max_abs(traj.final() - mode1(g, factor)) <= 1e-12);
}

TEST_CASE("constant-gain evolution is a semigroup") {
    const Grid1D g(64, BoundaryKind::Dirichlet);
    const Field ic = Field::sample(g, [](double x) {
        return std::sin(kPi * x) + 0.5 * std::sin(3 * kPi * x);
    });
    const Trajectory whole = solve_forward_linear(heat_spec(0.05, 0.8),
                                                  Gain::constant(1.0),
                                                  NudgeSign::Damping, ic, nullptr, 32);
    const Trajectory first = solve_forward_linear(heat_spec(0.05, 0.4),
                                                  Gain::constant(1.0),
                                                  NudgeSign::Damping, ic, nullptr, 16);
    const Field mid(g, first.final().values, 0.0);
    const Trajectory second = solve_forward_linear(heat_spec(0.05, 0.4),
                                                   Gain::constant(1.0),
                                                   NudgeSign::Damping, mid, nullptr, 16);
    CHECK(max_abs(second.final() - whole.final()) <= 1e-13);
}

TEST_CASE("observation snapshots are added back onto the error") {
    const Grid1D g(64, BoundaryKind::Dirichlet);
    const EquationSpec spec = heat_spec(0.02, 0.5);
    const Trajectory obs = solve_forward_linear(spec, Gain::constant(0.0),
                                                NudgeSign::Damping, mode1(g, 0.3),
                                                nullptr, 32);
    const Trajectory u = solve_forward_linear(spec, Gain::constant(1.0),
                                              NudgeSign::Damping, mode1(g, 0.5),
                                              &obs, 32);
    const double factor = std::exp(-(0.02 * kPi * kPi + 1.0) * 0.5);
    CHECK(max_abs((u.final() - obs.final()) - mode1(g, 0.5 * factor)) <= 1e-12);
}

TEST_CASE("record_every thins the stored times") {
    const Grid1D g(64, BoundaryKind::Dirichlet);
    const Trajectory traj = solve_forward_linear(heat_spec(0.01, 1.0),
                                                 Gain::constant(1.0),
                                                 NudgeSign::Damping, mode1(g, 1.0),
                                                 nullptr, 8, 4);
    CHECK(traj.times.size() == 3);
    CHECK_NOTHROW(traj.at_time(0.5));
}

TEST_CASE("finite-difference path converges at second order in time") {
    const Grid1D g(65, BoundaryKind::Dirichlet);
    const EquationSpec spec = heat_spec(0.05, 0.5);
    const Gain covering = Gain::spatial(1.0, 0.0, 1.0);

    auto final_state = [&](int nt) {
        return solve_forward_linear(spec, covering, NudgeSign::Damping, mode1(g, 1.0),
                                    nullptr, nt, nt)
            .final();
    };
    const Field reference = final_state(4096);
    const double coarse = max_abs(final_state(64) - reference);
    const double fine = max_abs(final_state(128) - reference);
    CHECK(fine > 0.0);
    CHECK(coarse / fine >= 3.0);
    CHECK(coarse / fine <= 5.0);
}

TEST_CASE("contraction oracle values") {
    const Gain g1 = Gain::constant(1.0);
    CHECK(theorem1_oracle(Theorem1Case::ConstantGain, g1, 1.0, 0.0) ==
          doctest::Approx(std::exp(-2.0)));
    CHECK(theorem1_oracle(Theorem1Case::ConstantGain, g1, 1.0, 0.5) ==
          doctest::Approx(std::exp(-1.0)));

    const Gain gw = Gain::temporal(1.0, 0.25, 0.75);
    CHECK(theorem1_oracle(Theorem1Case::TemporalWindow, gw, 1.0, 0.0) ==
          doctest::Approx(std::exp(-1.0)));
    CHECK(theorem1_oracle(Theorem1Case::TemporalWindow, gw, 1.0, 0.75) ==
          doctest::Approx(1.0));
    CHECK(theorem1_oracle(Theorem1Case::TemporalWindow, gw, 1.0, 0.9) ==
          doctest::Approx(1.0));

    CHECK_THROWS_AS(theorem1_oracle(Theorem1Case::ConstantGain,
                                    Gain::spatial(1.0, 0.0, 0.5), 1.0, 0.0),
                    NoOracleError);
}

TEST_CASE("backward modal reconstruction closes the sweep pair") {
    // The inversion amplifies rounding in the analyzed field by e^{exponent},
    // so a standalone closure check must keep the cap low enough that
    // amplified noise stays under the tolerance.
    const Grid1D g(64, BoundaryKind::Dirichlet);
    const EquationSpec spec = heat_spec(0.01, 1.0);
    const Field ic = Field::sample(g, [](double x) {
        return std::sin(kPi * x) + 0.5 * std::sin(3 * kPi * x);
    });
    const Trajectory fwd = solve_forward_linear(spec, Gain::constant(1.0),
                                                NudgeSign::Damping, ic, nullptr, 8);
    const BackwardModalResult back =
        backward_solve_modal(spec, Gain::constant(1.0), fwd.final(), 10.0);
    CHECK(back.refused_modes == 52);
    CHECK(back.total_modes == 62);
    CHECK(max_abs(back.initial - std::exp(-2.0) * ic) <= 1e-10);
}

TEST_CASE("coefficient-space sweep pair tracks the contraction at every time") {
    const Grid1D g(64, BoundaryKind::Dirichlet);
    const EquationSpec spec = heat_spec(0.01, 1.0);
    const Field ic = Field::sample(g, [](double x) {
        return std::sin(kPi * x) + 0.5 * std::sin(3 * kPi * x);
    });

    const Gain gw = Gain::temporal(1.0, 0.25, 0.75);
    const ModalSweepPair pair = sweep_pair_modal(spec, gw, ic, 64, 8);
    REQUIRE(pair.forward.times.size() == pair.backward.times.size());
    for (std::size_t i = 0; i < pair.forward.times.size(); ++i) {
        const double ratio = theorem1_oracle(Theorem1Case::TemporalWindow, gw, 1.0,
                                             pair.forward.times[i]);
        CHECK(max_abs(pair.backward.snapshots[i] - ratio * pair.forward.snapshots[i]) <=
              1e-12);
    }
    CHECK(pair.refused_modes == 42);

    CHECK_THROWS_AS(sweep_pair_modal(spec, Gain::spatial(1.0, 0.0, 0.5), ic, 64),
                    PreconditionError);
}

TEST_CASE("backward modal refuses past the amplification cap") {
    const Grid1D g(64, BoundaryKind::Dirichlet);
    const EquationSpec spec = heat_spec(0.01, 1.0);
    const Field hot = Field::sample(g, [](double x) { return std::sin(30 * kPi * x); });
    CHECK_THROWS_AS(backward_solve_modal(spec, Gain::constant(1.0),
                                         Field(g, hot.values, 1.0)),
                    TruncationError);

    const Field mixed = Field::sample(g, [](double x) {
        return std::sin(kPi * x) + 1e-3 * std::sin(30 * kPi * x);
    });
    const Trajectory fwd = solve_forward_linear(spec, Gain::constant(1.0),
                                                NudgeSign::Damping, mixed, nullptr, 8);
    const BackwardModalResult back =
        backward_solve_modal(spec, Gain::constant(1.0), fwd.final());
    CHECK(back.refused_modes >= 1);
    CHECK(back.refused_modes < back.total_modes);
}

TEST_CASE("regime guards") {
    const Grid1D g(64, BoundaryKind::Dirichlet);
    EquationSpec burgers = heat_spec(0.01, 1.0);
    burgers.advection = SelfAdvection{};
    CHECK_THROWS_AS(solve_forward_linear(burgers, Gain::constant(1.0),
                                         NudgeSign::Damping, mode1(g, 1.0),
                                         nullptr, 8),
                    UnsupportedRegime);

    EquationSpec inviscid;
    inviscid.nu = 0.0;
    inviscid.bc = BoundaryKind::Periodic;
    inviscid.T = 1.0;
    const Grid1D gp(64, BoundaryKind::Periodic);
    const Field w = Field::sample(gp, [](double x) { return std::sin(2 * kPi * x); });
    CHECK_THROWS_AS(solve_forward_linear(inviscid, Gain::constant(1.0),
                                         NudgeSign::Damping, w, nullptr, 8),
                    UnsupportedRegime);
}
