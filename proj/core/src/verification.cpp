#include "bfn/verification.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "bfn/burgers.hpp"
#include "bfn/characteristics.hpp"
#include "bfn/driver.hpp"
#include "bfn/errors.hpp"
#include "bfn/interpolate.hpp"
#include "bfn/linear_pde.hpp"
#include "bfn/norms.hpp"

namespace bfn {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double g_tamper = 0.0;

Field sine_mix(const Grid1D& g) {
    return Field::sample(g, [](double x) {
        return std::sin(kPi * x) + 0.5 * std::sin(3 * kPi * x) +
               0.25 * std::sin(8 * kPi * x);
    });
}

struct Summary {
    CriterionResult r;
    void add(const std::string& name, double v) { r.measured.emplace_back(name, v); }
    void tol(const std::string& name, double v) { r.tolerances.emplace_back(name, v); }
};

CriterionResult c1_viscous_constant_gain() {
    Summary s;
    s.r = {1, "viscous_constant_gain_contraction", false, {}, {}, ""};
    const EquationSpec spec{0.01, ConstantAdvection{0.0}, BoundaryKind::Dirichlet, 1.0};
    const Gain gain = Gain::constant(1.0);
    const Grid1D g(512, BoundaryKind::Dirichlet);
    const Field w0 = sine_mix(g);

    const ModalSweepPair pair = sweep_pair_modal(spec, gain, w0, 256, 16);

    const double scale = l2_norm(w0);
    double dev = 0;
    for (std::size_t i = 0; i < pair.forward.times.size(); ++i) {
        const double t = pair.forward.times[i];
        const double ratio = std::exp(-2.0 * (1.0 - t)) + g_tamper;
        dev = std::max(dev, l2_norm(pair.backward.snapshots[i] -
                                    ratio * pair.forward.snapshots[i]) /
                                scale);
    }
    s.add("max_relative_deviation", dev);
    s.tol("max_relative_deviation", 1e-8);
    s.r.pass = dev <= 1e-8;
    return s.r;
}

CriterionResult c2_viscous_window_gain() {
    Summary s;
    s.r = {2, "viscous_window_gain_contraction", false, {}, {}, ""};
    BfnConfig cfg;
    cfg.spec = {0.01, ConstantAdvection{0.0}, BoundaryKind::Dirichlet, 1.0};
    cfg.gain = Gain::temporal(1.0, 0.25, 0.75);
    cfg.u0_samples = sine_mix(Grid1D(512, BoundaryKind::Dirichlet)).values;
    cfg.grid_n = 512;
    cfg.nt = 256;
    cfg.record_every = 16;
    const BfnReport rep = run_bfn(cfg);

    const double ratio = rep.iterations[0].wtilde0_norm / rep.iterations[0].w0_norm;
    const double dev = std::abs(ratio - std::exp(-1.0));
    const double traj_dev = oracle_deviation(rep, "theorem1_case3");
    s.add("norm_ratio_deviation", dev);
    s.add("trajectory_deviation", traj_dev);
    s.tol("norm_ratio_deviation", 1e-8);
    s.tol("trajectory_deviation", 1e-8);
    s.r.pass = dev <= 1e-8 && traj_dev <= 1e-8;
    return s.r;
}

CriterionResult c3_illposedness_witness() {
    Summary s;
    s.r = {3, "interval_gain_illposedness_witness", false, {}, {}, ""};
    const EquationSpec spec{0.01, ConstantAdvection{0.0}, BoundaryKind::Dirichlet, 1.0};
    const Grid1D g(256, BoundaryKind::Dirichlet);
    const Field w0 = sine_mix(g);

    const IllposednessDiagnostic d10 =
        illposedness_diagnostic(spec, Gain::spatial(10.0, 0.0, 0.5), w0);
    const IllposednessDiagnostic d1 =
        illposedness_diagnostic(spec, Gain::spatial(1.0, 0.0, 0.5), w0);
    const IllposednessDiagnostic d01 =
        illposedness_diagnostic(spec, Gain::spatial(0.1, 0.0, 0.5), w0);

    s.add("ratio_K10", d10.ratio);
    s.add("residual_K10", d10.residual);
    s.add("residual_K1", d1.residual);
    s.add("residual_K0.1", d01.residual);
    s.add("reference_residual_K10", d10.reference_residual);
    s.tol("ratio_K10_min", 1e3);
    s.r.pass = d10.ratio >= 1e3 && d10.residual > d1.residual &&
               d1.residual > d01.residual;
    return s.r;
}

CriterionResult c4_linear_transport_rates() {
    Summary s;
    s.r = {4, "linear_transport_rate_matches_occupation", false, {}, {}, ""};
    const double horizons[] = {0.05, 0.25, 0.5, 0.75, 1.0};
    const Grid1D g(512, BoundaryKind::Periodic);
    const Gain gain = Gain::spatial(1.0, 0.0, 0.5);

    double max_dev = 0;
    bool observability_ok = true;
    double min_rate_T1 = kInf, max_rate_T1 = -kInf;
    for (double T : horizons) {
        BfnConfig cfg;
        cfg.spec = {0.0, ConstantAdvection{1.0}, BoundaryKind::Periodic, T};
        cfg.gain = gain;
        cfg.u0 = AnalyticProfile{AnalyticProfile::Shape::Sin2Pi, 1.0, 0.0, 0.0};
        cfg.grid_n = 512;
        cfg.nt = 2048;
        const BfnReport rep = run_bfn(cfg);

        const ProfileVelocity vel{g, std::vector<double>(512, 1.0)};
        const CharField cf = trace(TraceVelocity{vel}, g.nodes(), T, 2048);
        const std::vector<double> occupation = chi(gain, cf);

        for (std::size_t j = 0; j < rep.rate.size(); ++j) {
            if (std::isnan(rep.rate[j])) continue;
            max_dev = std::max(max_dev, std::abs(rep.rate[j] - 2.0 * occupation[j]));
            if (T == 1.0) {
                min_rate_T1 = std::min(min_rate_T1, rep.rate[j]);
                max_rate_T1 = std::max(max_rate_T1, rep.rate[j]);
            }
        }
        const bool expect_observable = T > 0.5;
        if (!rep.certificate || rep.certificate->observable != expect_observable)
            observability_ok = false;
    }
    s.add("max_rate_vs_occupation_deviation", max_dev);
    s.add("min_rate_T1", min_rate_T1);
    s.add("max_rate_T1", max_rate_T1);
    s.add("positivity_iff_T_above_half", observability_ok ? 1.0 : 0.0);
    s.tol("max_rate_vs_occupation_deviation", 1e-6);
    s.tol("rate_T1_equals_one", 1e-6);
    s.r.pass = max_dev <= 1e-6 && observability_ok &&
               std::abs(min_rate_T1 - 1.0) <= 1e-6 &&
               std::abs(max_rate_T1 - 1.0) <= 1e-6;
    return s.r;
}

struct BurgersSetup {
    Grid1D g{512, BoundaryKind::Periodic};
    Field u0;
    Field uobs0;
    BurgersSetup()
        : u0(AnalyticProfile{AnalyticProfile::Shape::Sin2Pi, 0.2, 0.0, 0.0}.sample(g)),
          uobs0(AnalyticProfile{AnalyticProfile::Shape::Sin2Pi, 0.1, 0.5, 0.0}.sample(g)) {}
};

/// Observation snapshots from the exact pre-shock solution, feet located by
/// Newton on the characteristic relation. Keeps the identity check free of
/// the solver's grid-resampling floor so step refinement stays visible.
Trajectory exact_observations(const Field& uobs0, double T, int nt) {
    const Grid1D& g = uobs0.grid;
    const std::vector<double> d0 = gradient(g, uobs0.values);
    Trajectory traj;
    for (int i = 0; i <= nt; ++i) {
        const double t = T * i / nt;
        std::vector<double> vals(static_cast<std::size_t>(g.n));
        for (int j = 0; j < g.n; ++j) {
            const double x = g.node(j);
            double xi = x;
            for (int k = 0; k < 50; ++k) {
                const double res = xi + t * interp_cubic(g, uobs0.values, xi) - x;
                const double step = res / (1.0 + t * interp_cubic(g, d0, xi));
                xi -= step;
                if (std::abs(step) < 1e-15) break;
            }
            vals[static_cast<std::size_t>(j)] = interp_cubic(g, uobs0.values, xi);
        }
        traj.times.push_back(t);
        traj.snapshots.emplace_back(g, std::move(vals), t);
    }
    return traj;
}

CriterionResult c5_self_advecting_error_bound() {
    Summary s;
    s.r = {5, "self_advecting_error_bound", false, {}, {}, ""};
    const BurgersSetup setup;
    const double T = 0.5;
    const int nt = 2048;
    const Trajectory obs =
        solve_inviscid_burgers(SweepDirection::Forward, Gain{}, setup.uobs0, nullptr, T, nt)
            .traj;
    double M = 0;
    for (const Field& snap : obs.snapshots) M = std::max(M, linf_grad(snap));

    const auto max_excess = [&](const Gain& gain) {
        const BurgersRun fwd =
            solve_inviscid_burgers(SweepDirection::Forward, gain, setup.u0, &obs, T, nt);
        const BurgersRun bwd = reverse_inviscid_burgers(gain, fwd.traj.final(), &obs, T, nt);
        double excess = -kInf;
        for (const Theorem6Point& p : theorem6_bound_check(gain, fwd, bwd, &obs, M))
            excess = std::max(excess, p.lhs - p.rhs);
        return excess;
    };

    const double excess_full = max_excess(Gain::constant(1.0));
    const double excess_window = max_excess(Gain::temporal(1.0, 0.1, 0.35));
    s.add("stretching_bound_M", M);
    s.add("max_excess_full_gain", excess_full);
    s.add("max_excess_window_gain", excess_window);
    s.tol("max_excess", 0.0);
    s.r.pass = excess_full <= 0.0 && excess_window <= 0.0;
    return s.r;
}

CriterionResult c6_characteristic_decay_identity() {
    Summary s;
    s.r = {6, "characteristic_decay_identity", false, {}, {}, ""};
    // Finer grid than the bound checks: the identity deviation has to sit on
    // the quadrature error alone for the step-refinement factor to show.
    const Grid1D g(1024, BoundaryKind::Periodic);
    const Field u0 = AnalyticProfile{AnalyticProfile::Shape::Sin2Pi, 0.2, 0.0, 0.0}.sample(g);
    const Field uobs0 =
        AnalyticProfile{AnalyticProfile::Shape::Sin2Pi, 0.1, 0.5, 0.0}.sample(g);
    const double T = 0.5;
    const Gain gain = Gain::constant(1.0);

    const auto max_dev = [&](int nt) {
        const Trajectory obs = exact_observations(setup.uobs0, T, nt);
        const BurgersRun fwd =
            solve_inviscid_burgers(SweepDirection::Forward, gain, setup.u0, &obs, T, nt);
        const std::vector<double> devs = proposition7_check(gain, fwd, &obs);
        return *std::max_element(devs.begin(), devs.end());
    };

    const double dev_2048 = max_dev(2048);
    const double dev_4096 = max_dev(4096);
    s.add("max_deviation_nt2048", dev_2048);
    s.add("max_deviation_nt4096", dev_4096);
    s.tol("max_deviation_nt2048", 1e-3);
    s.tol("refinement_factor", 0.6);
    s.r.pass = dev_2048 <= 1e-3 && dev_4096 <= 0.6 * dev_2048;
    return s.r;
}

CriterionResult c7_observability_threshold() {
    Summary s;
    s.r = {7, "observability_threshold", false, {}, {}, ""};
    const Grid1D g(512, BoundaryKind::Periodic);
    const Field u0 =
        AnalyticProfile{AnalyticProfile::Shape::Sin2Pi, 0.2, 0.0, 1.0}.sample(g);
    const Gain gain = Gain::spatial(1.0, 0.0, 0.5);
    const double T = 0.7;
    const int nt = 2048;

    const BurgersRun fwd =
        solve_inviscid_burgers(SweepDirection::Forward, gain, u0, nullptr, T, nt);
    const ObservabilityCertificate cert =
        observability_certificate(gain, fwd.curves, 0.0);
    const Array2D& carried = *fwd.curves.carried;

    double w0max = 0;
    for (std::size_t j = 0; j < carried.cols(); ++j)
        w0max = std::max(w0max, std::abs(carried(0, j)));
    const double bound = std::exp(-gain.amplitude * cert.m) * (1.0 + 1e-12);
    double max_ratio = -kInf;
    bool all_below = true;
    for (std::size_t j = 0; j < carried.cols(); ++j) {
        if (std::abs(carried(0, j)) <= 1e-10 * w0max) continue;
        const double ratio =
            std::abs(carried(carried.rows() - 1, j) / carried(0, j));
        max_ratio = std::max(max_ratio, ratio);
        if (ratio > bound) all_below = false;
    }
    s.add("certificate_m", cert.m);
    s.add("max_foot_ratio", max_ratio);
    s.add("ratio_bound", bound);
    s.tol("roundoff_allowance", 1e-12);
    s.r.pass = cert.observable && all_below;
    return s.r;
}

CriterionResult c8_gain_free_viscous_wellposedness() {
    Summary s;
    s.r = {8, "gain_free_viscous_wellposedness", false, {}, {}, ""};
    const Grid1D g(512, BoundaryKind::Dirichlet);
    const Field ic =
        AnalyticProfile{AnalyticProfile::Shape::SinPi, 0.2, 0.0, 0.0}.sample(g);

    const double discrepancy = k0_wellposedness_check(ic, 0.05, 0.5, 32, 300.0);
    const Trajectory fd =
        solve_viscous_burgers_forward(Gain{}, ic, nullptr, 0.05, 0.5, 2048, 2048);
    const Field ch = cole_hopf_evolve(ic, 0.05, 0.5, 511);
    const double mismatch = max_abs(fd.final() - ch);

    s.add("backward_forward_discrepancy", discrepancy);
    s.add("fd_vs_colehopf", mismatch);
    s.tol("backward_forward_discrepancy", 1e-6);
    s.tol("fd_vs_colehopf", 1e-4);
    s.r.pass = discrepancy <= 1e-6 && mismatch <= 1e-4;
    return s.r;
}

CriterionResult c9_viscous_backward_modal_blowup() {
    Summary s;
    s.r = {9, "viscous_backward_modal_blowup", false, {}, {}, ""};
    const auto coeffs = [](int N) {
        std::vector<std::complex<double>> a(static_cast<std::size_t>(N));
        for (int n = 1; n <= N; ++n)
            a[static_cast<std::size_t>(n - 1)] = 1.0 / (static_cast<double>(n) * n);
        return a;
    };
    const auto max_growth = [](const BnSequence& seq) {
        double m = -kInf;
        for (double gn : seq.growth)
            if (std::isfinite(gn)) m = std::max(m, gn);
        return m;
    };

    const BnSequence zero_gain = bn_sequence(coeffs(128), 0.0, 0.0, 1.0, 1.0);
    double b_zero_max = 0;
    for (const LogComplex& b : zero_gain.b) b_zero_max = std::max(b_zero_max, std::exp(b.log_abs));

    const double g32 = max_growth(bn_sequence(coeffs(32), 1.0, 1.0, 1.0, 1.0));
    const double g64 = max_growth(bn_sequence(coeffs(64), 1.0, 1.0, 1.0, 1.0));
    const double g128 = max_growth(bn_sequence(coeffs(128), 1.0, 1.0, 1.0, 1.0));

    const BnSequence hand = bn_sequence(coeffs(2), 1.0, 1.0, 1.0, 1.0);
    const double pref = std::expm1(-4.0);
    const double expected_b[3] = {
        pref * (std::exp(5.0) - 1.0) / 5.0,
        pref * 2.0 * 0.25 * (std::exp(7.0) - 1.0) / 7.0,
        pref * 0.0625 * (std::exp(11.0) - 1.0) / 11.0,
    };
    const double expected_under[3] = {
        pref * std::exp(5.0) / 5.0,
        pref * 2.0 * 0.25 * std::exp(7.0) / 7.0,
        pref * 0.0625 * std::exp(11.0) / 11.0,
    };
    double hand_dev = 0;
    for (int i = 0; i < 3; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        const double scale_b = std::max(1.0, std::abs(expected_b[i]));
        const double scale_u = std::max(1.0, std::abs(expected_under[i]));
        hand_dev = std::max(hand_dev,
                            std::abs(hand.b[idx].to_complex() - expected_b[i]) / scale_b);
        hand_dev = std::max(
            hand_dev, std::abs(hand.b_under[idx].to_complex() - expected_under[i]) / scale_u);
    }

    s.add("b_max_at_zero_gain", b_zero_max);
    s.add("max_growth_N32", g32);
    s.add("max_growth_N64", g64);
    s.add("max_growth_N128", g128);
    s.add("hand_case_deviation", hand_dev);
    s.tol("max_growth_min", 0.4);
    s.tol("hand_case_deviation", 1e-12);
    s.r.pass = b_zero_max == 0.0 && g128 >= 0.4 && g32 <= g64 + 1e-12 &&
               g64 <= g128 + 1e-12 && hand_dev <= 1e-12;
    return s.r;
}

CriterionResult c10_iteration_geometric_decay() {
    Summary s;
    s.r = {10, "iteration_geometric_decay", false, {}, {}, ""};
    const double T = 0.8;
    BfnConfig cfg;
    cfg.spec = {0.0, ConstantAdvection{1.0}, BoundaryKind::Periodic, T};
    cfg.gain = Gain::constant(1.0);
    cfg.u0 = AnalyticProfile{AnalyticProfile::Shape::Sin2Pi, 1.0, 0.0, 0.0};
    cfg.iterations = 3;
    cfg.grid_n = 512;
    cfg.nt = 1024;
    const BfnReport rep = run_bfn(cfg);

    const double target = std::exp(-2.0 * T);
    double dev = 0, fmin = kInf, fmax = -kInf;
    for (const IterationRecord& rec : rep.iterations) {
        const double f = rec.wtilde0_norm / rec.w0_norm;
        dev = std::max(dev, std::abs(f - target));
        fmin = std::min(fmin, f);
        fmax = std::max(fmax, f);
    }
    s.add("max_factor_deviation", dev);
    s.add("factor_spread", fmax - fmin);
    s.tol("max_factor_deviation", 1e-6);
    s.tol("factor_spread", 1e-6);
    s.r.pass = dev <= 1e-6 && (fmax - fmin) <= 1e-6;
    return s.r;
}

CriterionResult c11_self_advecting_figure_structure() {
    Summary s;
    s.r = {11, "self_advecting_figure_structure", false, {}, {}, ""};
    const double T = 1.0;
    const double alpha = std::min(0.2, 0.9 / (2.0 * kPi * T));
    BfnConfig cfg;
    cfg.spec = {0.0, SelfAdvection{}, BoundaryKind::Periodic, T};
    cfg.gain = Gain::spatial(1.0, 0.0, 0.5);
    cfg.u0 = AnalyticProfile{AnalyticProfile::Shape::Sin2Pi, alpha, 0.0, 0.0};
    cfg.grid_n = 512;
    cfg.nt = 2048;
    const BfnReport rep = run_bfn(cfg);

    const Grid1D g(cfg.grid_n, BoundaryKind::Periodic);
    double min_rate = kInf;
    double sum_low = 0, sum_high = 0;
    int n_low = 0, n_high = 0;
    for (int j = 0; j < g.n; ++j) {
        const double r = rep.rate[static_cast<std::size_t>(j)];
        if (std::isnan(r)) continue;
        min_rate = std::min(min_rate, r);
        const double x = g.node(j);
        if (x <= 0.1) {
            sum_low += r;
            n_low += 1;
        }
        if (0.5 <= x && x <= 0.6) {
            sum_high += r;
            n_high += 1;
        }
    }
    const double mean_low = n_low > 0 ? sum_low / n_low : 0.0;
    const double mean_high = n_high > 0 ? sum_high / n_high : 0.0;

    s.add("alpha", alpha);
    s.add("min_rate", min_rate);
    s.add("mean_rate_0_to_0.1", mean_low);
    s.add("mean_rate_0.5_to_0.6", mean_high);
    s.tol("min_rate_positive", 0.0);
    s.r.pass = min_rate > 0.0 && mean_high > mean_low;
    if (!s.r.pass)
        s.r.note = "structural comparison infeasible at this horizon; see docs/limitations.md";
    return s.r;
}

}  // namespace

std::vector<int> criterion_ids() { return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}; }

CriterionResult run_criterion(int id) {
    if (id < 1 || id > 11)
        throw PreconditionError("run_criterion: unknown criterion id " +
                                std::to_string(id));
    static const std::array<double, 11> budgets = {1, 1, 2, 5, 5, 10, 2, 3, 1, 2, 5};
    const auto started = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        switch (id) {
            case 1: r = c1_viscous_constant_gain(); break;
            case 2: r = c2_viscous_window_gain(); break;
            case 3: r = c3_illposedness_witness(); break;
            case 4: r = c4_linear_transport_rates(); break;
            case 5: r = c5_self_advecting_error_bound(); break;
            case 6: r = c6_characteristic_decay_identity(); break;
            case 7: r = c7_observability_threshold(); break;
            case 8: r = c8_gain_free_viscous_wellposedness(); break;
            case 9: r = c9_viscous_backward_modal_blowup(); break;
            case 10: r = c10_iteration_geometric_decay(); break;
            default: r = c11_self_advecting_figure_structure(); break;
        }
    } catch (const std::exception& e) {
        r.id = id;
        r.name = "criterion_" + std::to_string(id);
        r.pass = false;
        r.note = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    const double budget = budgets[static_cast<std::size_t>(id - 1)];
    r.measured.emplace_back("runtime_s", elapsed);
    r.tolerances.emplace_back("runtime_budget_s", budget);
    if (elapsed >= budget) r.pass = false;
    return r;
}

void set_oracle_tamper(double offset) { g_tamper = offset; }

}  // namespace bfn
