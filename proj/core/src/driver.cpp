#include "bfn/driver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <variant>

#include "bfn/burgers.hpp"
#include "bfn/errors.hpp"
#include "bfn/interpolate.hpp"
#include "bfn/linear_pde.hpp"
#include "bfn/modal.hpp"
#include "bfn/norms.hpp"

namespace bfn {

namespace {

constexpr double kExclusionFraction = 1e-10;

Field initial_field(const AnalyticProfile& profile,
                    const std::optional<std::vector<double>>& samples,
                    const Grid1D& g) {
    if (samples) {
        if (static_cast<int>(samples->size()) != g.n)
            throw PreconditionError("run_bfn: raw initial samples do not match the grid");
        return Field(g, *samples, 0.0);
    }
    return profile.sample(g, 0.0);
}

bool zero_observations(const BfnConfig& cfg) {
    if (cfg.uobs0_samples)
        return std::all_of(cfg.uobs0_samples->begin(), cfg.uobs0_samples->end(),
                           [](double v) { return v == 0.0; });
    return cfg.uobs0.is_zero();
}

double vec_l2(const Grid1D& g, const std::vector<double>& v, double t = 0) {
    return l2_norm(Field(g, v, t));
}

void fill_rate(BfnReport& rep) {
    rep.rate = decrease_rate_profile(rep.w0, rep.wtilde0);
    rep.excluded_nodes.clear();
    for (std::size_t j = 0; j < rep.rate.size(); ++j)
        if (std::isnan(rep.rate[j])) rep.excluded_nodes.push_back(static_cast<int>(j));
}

BfnReport run_viscous_linear(const BfnConfig& cfg, const Field& u0f,
                             const Field& uobs0f) {
    const double T = cfg.spec.T;
    Field w = u0f - uobs0f;
    const Theorem1Case tcase0 = cfg.gain.window ? Theorem1Case::TemporalWindow
                                                : Theorem1Case::ConstantGain;
    const auto* adv = std::get_if<ConstantAdvection>(&cfg.spec.advection);
    const bool modal = adv && adv->speed == 0.0;

    // With advection the sine modes no longer diagonalize the sweep, so the
    // backward initial field comes from the closed-form ratio at t = 0 and is
    // carried forward through the stable anti-damped evolution.
    const auto cn_pair = [&](const Field& start) {
        ModalSweepPair p;
        p.forward = solve_forward_linear(cfg.spec, cfg.gain, NudgeSign::Damping,
                                         start, nullptr, cfg.nt, cfg.record_every);
        const Field wt0 = theorem1_oracle(tcase0, cfg.gain, T, 0.0) * start;
        p.backward = solve_forward_linear(cfg.spec, cfg.gain, NudgeSign::AntiDamping,
                                          wt0, nullptr, cfg.nt, cfg.record_every);
        return p;
    };

    BfnReport rep;
    rep.w0 = w;
    for (int it = 0; it < cfg.iterations; ++it) {
        const ModalSweepPair pair =
            modal ? sweep_pair_modal(cfg.spec, cfg.gain, w, cfg.nt, cfg.record_every)
                  : cn_pair(w);
        rep.truncated_modes = std::max(rep.truncated_modes, pair.refused_modes);
        const Field& wt0 = pair.backward.initial();

        if (it == 0) {
            rep.wtilde0 = wt0;
            const double scale = std::max(l2_norm(w), 1e-300);
            double dev = 0;
            for (std::size_t i = 0; i < pair.forward.times.size(); ++i) {
                const double ratio =
                    theorem1_oracle(tcase0, cfg.gain, T, pair.forward.times[i]);
                dev = std::max(dev, l2_norm(pair.backward.snapshots[i] -
                                            ratio * pair.forward.snapshots[i]) /
                                        scale);
            }
            rep.oracle_deviations[cfg.gain.window ? "theorem1_case3"
                                                  : "theorem1_case1"] = dev;
        }

        rep.iterations.push_back(
            {l2_norm(w), l2_norm(pair.forward.final()), l2_norm(wt0)});
        w = wt0;
    }
    fill_rate(rep);
    return rep;
}

BfnReport run_inviscid_linear(const BfnConfig& cfg, const Field& u0f,
                              const Field& uobs0f) {
    const Grid1D& g = u0f.grid;
    const double T = cfg.spec.T;

    ProfileVelocity vel{g, {}};
    if (const auto* c = std::get_if<ConstantAdvection>(&cfg.spec.advection)) {
        vel.samples.assign(static_cast<std::size_t>(g.n), c->speed);
    } else {
        const auto& p = std::get<ProfileAdvection>(cfg.spec.advection);
        if (static_cast<int>(p.samples.size()) != g.n)
            throw PreconditionError("run_bfn: advection profile does not match the grid");
        vel.samples = p.samples;
    }
    const CharField cf = trace(TraceVelocity{vel}, g.nodes(), T, cfg.nt);

    std::vector<double> w = (u0f - uobs0f).values;

    BfnReport rep;
    rep.w0 = Field(g, w, 0.0);
    for (int it = 0; it < cfg.iterations; ++it) {
        const Array2D fwd = carry_along(cfg.gain, SweepDirection::Forward, cf, w);
        const std::vector<double> wT = fwd.row_copy(fwd.rows() - 1);
        const Array2D bwd = carry_along(cfg.gain, SweepDirection::Backward, cf, wT);
        std::vector<double> wt0 = bwd.row_copy(0);

        if (it == 0) {
            rep.wtilde0 = Field(g, wt0, 0.0);
            const std::vector<double> oracle = theorem4_oracle(cfg.gain, cf, 0.0, T);
            const double scale = std::max(max_abs(rep.w0), 1e-300);
            double dev = 0;
            for (std::size_t j = 0; j < wt0.size(); ++j)
                dev = std::max(dev, std::abs(wt0[j] - oracle[j] * w[j]) / scale);
            rep.oracle_deviations["theorem4"] = dev;
            rep.certificate = observability_certificate(cfg.gain, cf, 0.0);
        }

        rep.iterations.push_back(
            {vec_l2(g, w), vec_l2(g, wT, T), vec_l2(g, wt0)});
        w = std::move(wt0);
    }
    fill_rate(rep);
    return rep;
}

BfnReport run_inviscid_burgers(const BfnConfig& cfg, const Field& u0f,
                               const Field& uobs0f) {
    const double T = cfg.spec.T;
    if (T >= shock_time(u0f))
        throw PreconditionError(
            "run_bfn: T is past the shock time of u0; the decay estimate needs "
            "classical solutions (Theorem 6, docs/theory.md)");
    if (T >= shock_time(uobs0f))
        throw PreconditionError(
            "run_bfn: T is past the shock time of uobs0; the decay estimate "
            "needs classical solutions (Theorem 6, docs/theory.md)");

    std::optional<Trajectory> obs_store;
    const Trajectory* obs = nullptr;
    if (!zero_observations(cfg)) {
        obs_store = solve_inviscid_burgers(SweepDirection::Forward, Gain{}, uobs0f,
                                           nullptr, T, cfg.nt)
                        .traj;
        obs = &*obs_store;
    }
    double M = 0;
    if (obs)
        for (const Field& s : obs->snapshots) M = std::max(M, linf_grad(s));

    BfnReport rep;
    rep.w0 = u0f - uobs0f;
    Field u = u0f;
    for (int it = 0; it < cfg.iterations; ++it) {
        const BurgersRun fwd =
            solve_inviscid_burgers(SweepDirection::Forward, cfg.gain, u, obs, T, cfg.nt);
        const BurgersRun bwd =
            reverse_inviscid_burgers(cfg.gain, fwd.traj.final(), obs, T, cfg.nt);
        Field ut0 = bwd.traj.initial();

        Field w0_it = u - uobs0f;
        Field wT_it = obs ? fwd.traj.final() - obs->at_time(T) : fwd.traj.final();
        Field wt0_it = ut0 - uobs0f;

        if (it == 0) {
            rep.wtilde0 = wt0_it;
            if (cfg.gain.full_support()) {
                double excess = -std::numeric_limits<double>::infinity();
                for (const Theorem6Point& p :
                     theorem6_bound_check(cfg.gain, fwd, bwd, obs, M))
                    excess = std::max(excess, p.lhs - p.rhs);
                rep.oracle_deviations["theorem6"] = excess;
            }
            const std::vector<double> devs = proposition7_check(cfg.gain, fwd, obs);
            rep.oracle_deviations["proposition7"] =
                *std::max_element(devs.begin(), devs.end());
            rep.certificate = observability_certificate(cfg.gain, fwd.curves, M);
        }

        rep.iterations.push_back(
            {l2_norm(w0_it), l2_norm(wT_it), l2_norm(wt0_it)});
        u = std::move(ut0);
    }
    fill_rate(rep);
    return rep;
}

}  // namespace

void BfnConfig::check() const {
    spec.check();
    gain.check();
    if (iterations < 1) throw PreconditionError("BfnConfig: iterations must be >= 1");
    if (grid_n < 4) throw PreconditionError("BfnConfig: grid_n must be >= 4");
    if (nt < 1) throw PreconditionError("BfnConfig: nt must be >= 1");
    if (record_every < 1 || nt % record_every != 0)
        throw PreconditionError("BfnConfig: record_every must divide nt");
}

BfnReport run_bfn(const BfnConfig& cfg) {
    cfg.check();
    const Grid1D grid(cfg.grid_n, cfg.spec.bc);
    const Field u0f = initial_field(cfg.u0, cfg.u0_samples, grid);
    const Field uobs0f = initial_field(cfg.uobs0, cfg.uobs0_samples, grid);

    if (cfg.spec.nu > 0) {
        if (cfg.spec.is_burgers()) {
            if (cfg.gain.amplitude > 0)
                throw UnsupportedRegime(
                    "run_bfn: viscous self-advecting nudging is refused: the "
                    "backward sweep need not admit any solution (Theorem 2, "
                    "docs/theory.md); quantify the modal blow-up with bn_sequence "
                    "or the bn-growth command");
            throw UnsupportedRegime(
                "run_bfn: viscous self-advecting flow with K = 0 has no nudging "
                "to iterate; the backward problem is well-posed through the "
                "heat substitution (Proposition 3, docs/theory.md); use "
                "colehopf-check");
        }
        if (!cfg.gain.full_support())
            throw UnsupportedRegime(
                "run_bfn: viscous linear backward sweep with an interval gain "
                "support is ill-posed (Theorem 1 case 2, docs/theory.md); "
                "quantify with illposedness_diagnostic");
        return run_viscous_linear(cfg, u0f, uobs0f);
    }
    if (cfg.spec.is_burgers()) return run_inviscid_burgers(cfg, u0f, uobs0f);
    return run_inviscid_linear(cfg, u0f, uobs0f);
}

std::vector<double> decrease_rate_profile(const Field& w0, const Field& wtilde0) {
    if (w0.grid != wtilde0.grid)
        throw PreconditionError("decrease_rate_profile: fields live on different grids");
    const double floor = kExclusionFraction * max_abs(w0);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> rate(w0.values.size(), nan);
    for (std::size_t j = 0; j < rate.size(); ++j) {
        if (std::abs(w0.values[j]) <= floor) continue;
        const double ratio = wtilde0.values[j] / w0.values[j];
        if (ratio <= 0) continue;
        rate[j] = -std::log(ratio);
    }
    return rate;
}

namespace {

/// Relative least-squares residual ||(I - Q Q^T) y|| / ||y|| over the column
/// span, via modified Gram-Schmidt with reorthogonalization. Columns that are
/// numerically dependent (an expected symptom of the ill-posed regimes this
/// diagnostic probes) are dropped instead of poisoning the factorization.
double lsq_relative_residual(const std::vector<std::vector<double>>& cols,
                             const std::vector<double>& y) {
    const std::size_t n = y.size();
    double ynorm = 0;
    for (double v : y) ynorm += v * v;
    ynorm = std::sqrt(ynorm);
    if (ynorm == 0) return 0;

    const auto dot = [n](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
        return s;
    };
    const auto project_out = [&](const std::vector<std::vector<double>>& basis,
                                 std::vector<double>& v) {
        for (const std::vector<double>& q : basis) {
            const double c = dot(q, v);
            for (std::size_t i = 0; i < n; ++i) v[i] -= c * q[i];
        }
    };

    std::vector<std::vector<double>> basis;
    basis.reserve(cols.size());
    for (std::vector<double> v : cols) {
        const double v0 = std::sqrt(dot(v, v));
        if (v0 == 0) continue;
        for (double& x : v) x /= v0;
        project_out(basis, v);
        project_out(basis, v);
        const double vn = std::sqrt(dot(v, v));
        if (vn <= 1e-10) continue;
        for (double& x : v) x /= vn;
        basis.push_back(std::move(v));
    }

    std::vector<double> resid(y);
    project_out(basis, resid);
    project_out(basis, resid);
    return std::sqrt(dot(resid, resid)) / ynorm;
}

double diagnostic_residual(const EquationSpec& spec, const Gain& gain,
                           const Field& w0, int nt, int k_max) {
    const Trajectory fwd =
        solve_forward_linear(spec, gain, NudgeSign::Damping, w0, nullptr, nt, nt);
    const std::vector<double>& y = fwd.final().values;

    std::vector<std::vector<double>> cols;
    cols.reserve(static_cast<std::size_t>(k_max));
    for (int k = 1; k <= k_max; ++k) {
        const Field ek = Field::sample(w0.grid, [k](double x) {
            return std::sin(k * std::numbers::pi * x);
        });
        cols.push_back(solve_forward_linear(spec, gain, NudgeSign::AntiDamping, ek,
                                            nullptr, nt, nt)
                           .final()
                           .values);
    }
    return lsq_relative_residual(cols, y);
}

}  // namespace

IllposednessDiagnostic illposedness_diagnostic(const EquationSpec& spec,
                                               const Gain& gain, const Field& w0,
                                               int nt, double amplification_cap) {
    spec.check();
    gain.check();
    if (!(spec.nu > 0) || spec.is_burgers())
        throw PreconditionError("illposedness_diagnostic: viscous linear problems only");
    if (const auto* c = std::get_if<ConstantAdvection>(&spec.advection);
        !c || c->speed != 0.0)
        throw PreconditionError(
            "illposedness_diagnostic: zero advection required so the ascending "
            "backward system is modal-diagonal");
    if (nt < 1) throw PreconditionError("illposedness_diagnostic: nt must be >= 1");
    if (amplification_cap <= 0)
        throw PreconditionError("illposedness_diagnostic: amplification cap must be > 0");

    const double pi = std::numbers::pi;
    int k_max = static_cast<int>(
        std::floor(std::sqrt(amplification_cap / (spec.nu * pi * pi * spec.T))));
    k_max = std::clamp(k_max, 1, full_mode_count(w0.grid, ModalBasis::Sine));

    IllposednessDiagnostic d;
    d.residual = diagnostic_residual(spec, gain, w0, nt, k_max);
    Gain reference = gain;
    reference.support.reset();
    d.reference_residual = diagnostic_residual(spec, reference, w0, nt, k_max);
    if (d.reference_residual > 0)
        d.ratio = d.residual / d.reference_residual;
    else
        d.ratio = d.residual == 0 ? 0.0
                                  : std::numeric_limits<double>::infinity();
    return d;
}

double oracle_deviation(const BfnReport& report, const std::string& case_id) {
    const auto it = report.oracle_deviations.find(case_id);
    if (it == report.oracle_deviations.end())
        throw NoOracleError("oracle_deviation: run recorded no prediction for '" +
                            case_id + "'");
    return it->second;
}

}  // namespace bfn
