#include "bfn/burgers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bfn/errors.hpp"
#include "bfn/interpolate.hpp"
#include "bfn/modal.hpp"
#include "bfn/norms.hpp"
#include "tridiag.hpp"

namespace bfn {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kOrderingTol = 1e-12;

/// Observation values and slopes at arbitrary (t,x): cubic in space, linear
/// in time, slopes from the fourth-order gradient of each snapshot (built
/// lazily, once per snapshot).
class ObsEval {
  public:
    explicit ObsEval(const Trajectory* traj) : traj_(traj) {
        if (traj_) grads_.resize(traj_->snapshots.size());
    }

    bool active() const { return traj_ != nullptr; }

    double value(double t, double x) const {
        if (!traj_) return 0.0;
        const auto [i, th] = bracket(t);
        const double v0 = interp_cubic(grid(i), traj_->snapshots[i].values, x);
        if (th == 0.0) return v0;
        const double v1 = interp_cubic(grid(i + 1), traj_->snapshots[i + 1].values, x);
        return (1 - th) * v0 + th * v1;
    }

    double slope(double t, double x) const {
        if (!traj_) return 0.0;
        const auto [i, th] = bracket(t);
        const double s0 = interp_cubic(grid(i), grad(i), x);
        if (th == 0.0) return s0;
        const double s1 = interp_cubic(grid(i + 1), grad(i + 1), x);
        return (1 - th) * s0 + th * s1;
    }

  private:
    const Grid1D& grid(std::size_t i) const { return traj_->snapshots[i].grid; }

    const std::vector<double>& grad(std::size_t i) const {
        if (grads_[i].empty())
            grads_[i] = gradient(grid(i), traj_->snapshots[i].values);
        return grads_[i];
    }

    std::pair<std::size_t, double> bracket(double t) const {
        const auto& ts = traj_->times;
        if (t <= ts.front()) return {0, 0.0};
        if (t >= ts.back()) return {ts.size() - 1, 0.0};
        const auto it = std::upper_bound(ts.begin(), ts.end(), t);
        const std::size_t i = static_cast<std::size_t>(it - ts.begin()) - 1;
        return {i, (t - ts[i]) / (ts[i + 1] - ts[i])};
    }

    const Trajectory* traj_;
    mutable std::vector<std::vector<double>> grads_;
};

void check_row_ordering(const Array2D& lifted, std::size_t row, double t) {
    const std::size_t nf = lifted.cols();
    if (nf < 2) return;
    for (std::size_t j = 0; j + 1 < nf; ++j)
        if (lifted(row, j + 1) - lifted(row, j) < kOrderingTol)
            throw CrossingError(
                "self-advecting characteristics crossed (Theorem 6, "
                "docs/theory.md)", t);
    if (lifted(row, 0) + 1.0 - lifted(row, nf - 1) < kOrderingTol)
        throw CrossingError(
            "self-advecting characteristics crossed the wrap (Theorem 6, "
            "docs/theory.md)", t);
}

double chord_occupation(const Gain& gain, double x0, double x1, double t0, double t1) {
    double lo = t0, hi = t1;
    if (gain.window) {
        lo = std::max(lo, gain.window->first);
        hi = std::min(hi, gain.window->second);
    }
    if (hi <= lo) return 0.0;
    if (!gain.support) return hi - lo;
    const double xa = x0 + (x1 - x0) * ((lo - t0) / (t1 - t0));
    const double xb = x0 + (x1 - x0) * ((hi - t0) / (t1 - t0));
    return occupation_segment(xa, xb, hi - lo, gain.support->first,
                              gain.support->second);
}

/// One joint Runge-Kutta step of (X, u) with d X/dt = u and
/// d u/dt = sgn K(t,X)(u - u_obs); h may be negative.
void rk4_pair(const Gain& gain, double sgn_rate, const ObsEval& obs, double t,
              double h, double& X, double& u) {
    auto fu = [&](double tt, double x, double uu) {
        const double k = gain.evaluate(tt, wrap01(x)) * sgn_rate;
        return k * (uu - obs.value(tt, x));
    };
    const double k1x = u;
    const double k1u = fu(t, X, u);
    const double k2x = u + h / 2 * k1u;
    const double k2u = fu(t + h / 2, X + h / 2 * k1x, u + h / 2 * k1u);
    const double k3x = u + h / 2 * k2u;
    const double k3u = fu(t + h / 2, X + h / 2 * k2x, u + h / 2 * k2u);
    const double k4x = u + h * k3u;
    const double k4u = fu(t + h, X + h * k3x, u + h * k3u);
    X += h / 6 * (k1x + 2 * k2x + 2 * k3x + k4x);
    u += h / 6 * (k1u + 2 * k2u + 2 * k3u + k4u);
}

Trajectory resample_run(const CharField& cf, const Field& boundary_snapshot,
                        std::size_t boundary_row, const Grid1D& g) {
    Trajectory out;
    out.spec.nu = 0;
    out.spec.advection = SelfAdvection{};
    out.spec.bc = BoundaryKind::Periodic;
    out.spec.T = cf.times.back();
    out.times = cf.times;
    const Array2D& vals = *cf.carried;
    out.snapshots.reserve(vals.rows());
    for (std::size_t i = 0; i < vals.rows(); ++i) {
        if (i == boundary_row) {
            Field f = boundary_snapshot;
            f.time_tag = cf.times[i];
            out.snapshots.push_back(std::move(f));
            continue;
        }
        std::vector<double> pos(cf.feet.size());
        for (std::size_t j = 0; j < pos.size(); ++j) pos[j] = cf.position(i, j);
        out.snapshots.push_back(resample_periodic(pos, vals.row_copy(i), g, cf.times[i]));
    }
    out.validate();
    return out;
}

void check_burgers_inputs(const Field& boundary_data, const Trajectory* uobs,
                          double T, int nt) {
    if (boundary_data.grid.bc != BoundaryKind::Periodic)
        throw PreconditionError("inviscid solver: periodic grid required");
    if (!(T > 0)) throw PreconditionError("inviscid solver: T must be > 0");
    if (nt < 1) throw PreconditionError("inviscid solver: nt must be >= 1");
    if (uobs) {
        uobs->validate();
        if (uobs->snapshots.front().grid != boundary_data.grid)
            throw PreconditionError("inviscid solver: observation grid mismatch");
        if (uobs->t_begin() > 1e-12 || uobs->t_end() < T - 1e-12)
            throw PreconditionError("inviscid solver: observations do not cover [0,T]");
        if (T >= shock_time(uobs->initial()))
            throw PreconditionError(
                "inviscid solver: T is past the shock time of the observed "
                "state (Theorem 6, docs/theory.md)");
    }
}

BurgersRun integrate_self_advecting(double sgn_rate, const Gain& gain,
                                    const Field& boundary_data,
                                    const Trajectory* uobs, double T, int nt,
                                    bool downward) {
    gain.check();
    check_burgers_inputs(boundary_data, uobs, T, nt);
    const Grid1D& g = boundary_data.grid;
    const std::size_t nf = static_cast<std::size_t>(g.n);
    const double dt = T / nt;
    const ObsEval obs(uobs);
    const bool exact_factor = !obs.active();

    CharField cf;
    cf.times.resize(static_cast<std::size_t>(nt) + 1);
    for (int i = 0; i <= nt; ++i) cf.times[static_cast<std::size_t>(i)] = i * dt;
    cf.times.back() = T;
    cf.lifted = Array2D(static_cast<std::size_t>(nt) + 1, nf);
    Array2D vals(static_cast<std::size_t>(nt) + 1, nf);

    const std::size_t start_row = downward ? static_cast<std::size_t>(nt) : 0;
    for (std::size_t j = 0; j < nf; ++j) {
        cf.lifted(start_row, j) = g.node(static_cast<int>(j));
        vals(start_row, j) = boundary_data[j];
    }

    for (int s = 0; s < nt; ++s) {
        const std::size_t src = downward ? static_cast<std::size_t>(nt - s)
                                         : static_cast<std::size_t>(s);
        const std::size_t dst = downward ? src - 1 : src + 1;
        const double t_src = cf.times[src];
        const double h = downward ? -dt : dt;
        for (std::size_t j = 0; j < nf; ++j) {
            double X = cf.lifted(src, j);
            double u = vals(src, j);
            rk4_pair(gain, sgn_rate, obs, t_src, h, X, u);
            cf.lifted(dst, j) = X;
            if (exact_factor) {
                // Zero observations make the value equation linear; replace
                // the Runge-Kutta value with the exact integrating factor so
                // the carried ratios reproduce exp(rate * occupation) bitwise.
                const double occ = chord_occupation(
                    gain, cf.lifted(std::min(src, dst), j),
                    cf.lifted(std::max(src, dst), j), cf.times[std::min(src, dst)],
                    cf.times[std::max(src, dst)]);
                const double dir = downward ? -1.0 : 1.0;
                u = vals(src, j) * std::exp(sgn_rate * gain.amplitude * dir * occ);
            }
            vals(dst, j) = u;
        }
        check_row_ordering(cf.lifted, dst, cf.times[dst]);
    }

    cf.feet.resize(nf);
    for (std::size_t j = 0; j < nf; ++j) cf.feet[j] = wrap01(cf.lifted(0, j));
    cf.carried = std::move(vals);

    BurgersRun run;
    run.traj = resample_run(cf, boundary_data, start_row, g);
    run.curves = std::move(cf);
    return run;
}

}  // namespace

BurgersRun solve_inviscid_burgers(SweepDirection direction, const Gain& gain,
                                  const Field& boundary_data, const Trajectory* uobs,
                                  double T, int nt) {
    if (T >= shock_time(boundary_data))
        throw PreconditionError(
            "solve_inviscid_burgers: T is past the shock time of the initial "
            "state (Theorem 6, docs/theory.md)");
    const double rate_sign = (direction == SweepDirection::Forward) ? -1.0 : gain.kappa;
    return integrate_self_advecting(rate_sign, gain, boundary_data, uobs, T, nt,
                                    /*downward=*/false);
}

BurgersRun reverse_inviscid_burgers(const Gain& gain, const Field& final_data,
                                    const Trajectory* uobs, double T, int nt) {
    // Integrating the +K' system downward damps along the integration
    // direction, so the reverse sweep needs no shock guard of its own; the
    // ordering check still aborts if the curves fold.
    return integrate_self_advecting(gain.kappa, gain, final_data, uobs, T, nt,
                                    /*downward=*/true);
}

std::vector<double> proposition7_check(const Gain& gain, const BurgersRun& run,
                                       const Trajectory* uobs) {
    const CharField& cf = run.curves;
    if (!cf.carried) throw PreconditionError("proposition7_check: run carries no values");
    const ObsEval obs(uobs);
    const std::size_t nf = cf.feet.size();
    const std::size_t ntimes = static_cast<std::size_t>(cf.n_times());
    const Array2D& vals = *cf.carried;

    std::vector<double> dev(nf);
    for (std::size_t j = 0; j < nf; ++j) {
        double int_k = 0, int_slope = 0;
        double fk_prev = 0, fs_prev = 0;
        for (std::size_t i = 0; i < ntimes; ++i) {
            const double t = cf.times[i];
            const double x = cf.lifted(i, j);
            const double fk = gain.evaluate(t, wrap01(x));
            const double fs = obs.slope(t, x);
            if (i > 0) {
                const double half = (cf.times[i] - cf.times[i - 1]) / 2;
                int_k += half * (fk_prev + fk);
                int_slope += half * (fs_prev + fs);
            }
            fk_prev = fk;
            fs_prev = fs;
        }
        const double w0 = vals(0, j) - obs.value(cf.times.front(), cf.lifted(0, j));
        const double wT =
            vals(ntimes - 1, j) - obs.value(cf.times.back(), cf.lifted(ntimes - 1, j));
        dev[j] = std::abs(wT - w0 * std::exp(-int_k - int_slope));
    }
    return dev;
}

std::vector<Theorem6Point> theorem6_bound_check(const Gain& gain,
                                                const BurgersRun& forward_run,
                                                const BurgersRun& backward_run,
                                                const Trajectory* uobs, double M) {
    gain.check();
    if (!gain.full_support())
        throw PreconditionError(
            "theorem6_bound_check: the bound covers constant and windowed gains "
            "only (Theorem 6)");
    if (M < 0) throw PreconditionError("theorem6_bound_check: M must be >= 0");
    const Trajectory& fw = forward_run.traj;
    const Trajectory& bw = backward_run.traj;
    if (fw.times.size() != bw.times.size())
        throw PreconditionError("theorem6_bound_check: runs store different times");
    const double T = fw.t_end();
    const double keff = (1.0 + gain.kappa) * gain.amplitude;

    std::vector<Theorem6Point> out;
    out.reserve(fw.times.size());
    for (std::size_t i = 0; i < fw.times.size(); ++i) {
        const double t = fw.times[i];
        if (std::abs(bw.times[i] - t) > 1e-12)
            throw PreconditionError("theorem6_bound_check: time grids differ");
        Field wf = fw.snapshots[i];
        Field wb = bw.snapshots[i];
        if (uobs) {
            const Field& o = uobs->at_time(t);
            wf = wf - o;
            wb = wb - o;
        }
        Theorem6Point p;
        p.t = t;
        p.lhs = l2_norm(wb);
        p.rhs = std::exp(-keff * gain.window_overlap(t, T) + M * (T - t)) * l2_norm(wf);
        p.satisfied = p.lhs <= p.rhs;
        out.push_back(p);
    }
    return out;
}

Trajectory solve_viscous_burgers_forward(const Gain& gain, const Field& ic,
                                         const Trajectory* uobs, double nu,
                                         double T, int nt, int record_every) {
    gain.check();
    if (ic.grid.bc != BoundaryKind::Dirichlet)
        throw PreconditionError("solve_viscous_burgers_forward: Dirichlet grid required");
    if (!(nu > 0)) throw PreconditionError("solve_viscous_burgers_forward: nu must be > 0");
    if (!(T > 0)) throw PreconditionError("solve_viscous_burgers_forward: T must be > 0");
    if (nt < 1) throw PreconditionError("solve_viscous_burgers_forward: nt must be >= 1");
    if (record_every < 1 || nt % record_every != 0)
        throw PreconditionError("solve_viscous_burgers_forward: record_every must divide nt");
    if (uobs) {
        uobs->validate();
        if (uobs->snapshots.front().grid != ic.grid)
            throw PreconditionError("solve_viscous_burgers_forward: observation grid mismatch");
    }

    const Grid1D& g = ic.grid;
    const int n = g.n;
    const double h = g.dx();
    const double dt = T / nt;
    const double alpha = nu * dt / (2 * h * h);
    const std::size_t m = static_cast<std::size_t>(n - 2);

    detail::Tridiag A;
    A.sub.assign(m, -alpha);
    A.diag.assign(m, 1 + 2 * alpha);
    A.sup.assign(m, -alpha);
    A.factorize();

    std::vector<double> kx(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) kx[j] = gain.in_support(g.node(j)) ? gain.amplitude : 0.0;

    auto nonlinear = [&](const std::vector<double>& u, std::vector<double>& out) {
        for (std::size_t j = 0; j < m; ++j)
            out[j] = (u[j + 2] * u[j + 2] - u[j] * u[j]) / (4 * h);
    };

    Trajectory out;
    out.spec = EquationSpec{nu, SelfAdvection{}, BoundaryKind::Dirichlet, T};
    out.times.push_back(0.0);
    out.snapshots.push_back(ic);
    out.snapshots.back().time_tag = 0.0;

    std::vector<double> u(ic.values);
    std::vector<double> adv_prev(m), adv(m), rhs(m);
    for (int i = 0; i < nt; ++i) {
        const double t1 = (i + 1 == nt) ? T : (i + 1) * dt;
        double umax = 0;
        for (double x : u) umax = std::max(umax, std::abs(x));
        if (umax * dt / h > 0.5)
            throw StabilityError(
                "solve_viscous_burgers_forward: advection CFL exceeded at t = " +
                std::to_string(i * dt) + " (max|u| dt/dx = " +
                std::to_string(umax * dt / h) + " > 0.5)");

        nonlinear(u, adv);
        for (std::size_t j = 0; j < m; ++j) {
            const double expl =
                (i == 0) ? adv[j] : 1.5 * adv[j] - 0.5 * adv_prev[j];
            rhs[j] = alpha * u[j] + (1 - 2 * alpha) * u[j + 1] + alpha * u[j + 2] -
                     dt * expl;
        }
        std::swap(adv, adv_prev);
        A.solve(rhs);

        const double over = gain.window_overlap(i * dt, t1);
        const Field* o = uobs ? &uobs->at_time(t1) : nullptr;
        for (std::size_t j = 0; j < m; ++j) {
            const double star = rhs[j];
            const double target = o ? o->values[j + 1] : 0.0;
            const double f = std::exp(-kx[j + 1] * over);
            u[j + 1] = o ? target + (star - target) * f
                         : (kx[j + 1] == 0.0 ? star : star * f);
        }

        if ((i + 1) % record_every == 0) {
            out.times.push_back(t1);
            out.snapshots.emplace_back(g, u, t1);
        }
    }
    out.validate();
    return out;
}

Field cole_hopf(const Field& f, double nu, ColeHopfDirection direction) {
    if (!(nu > 0)) throw PreconditionError("cole_hopf: nu must be > 0");
    const Grid1D& g = f.grid;
    const int n = g.n;
    const double h = g.dx();

    if (direction == ColeHopfDirection::ToHeat) {
        if (g.bc != BoundaryKind::Dirichlet)
            throw PreconditionError("cole_hopf: ToHeat expects the Dirichlet state");
        const std::vector<double> du = gradient(g, f.values);
        std::vector<double> v(static_cast<std::size_t>(n));
        double acc = 0;
        for (int j = 0; j < n; ++j) {
            if (j > 0) acc += h / 2 * (f[static_cast<size_t>(j - 1)] + f[static_cast<size_t>(j)]);
            // Euler-Maclaurin endpoint correction lifts the cumulative
            // trapezoid to fourth order, matching the gradient used inverse.
            const double corrected = acc - h * h / 12 * (du[static_cast<size_t>(j)] - du[0]);
            v[static_cast<size_t>(j)] = std::exp(-corrected / (2 * nu));
        }
        return Field(Grid1D(n, BoundaryKind::Neumann), std::move(v), f.time_tag);
    }

    if (g.bc != BoundaryKind::Neumann)
        throw PreconditionError("cole_hopf: FromHeat expects the heat-side field");
    std::vector<double> logv(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const double vj = f[static_cast<size_t>(j)];
        if (!(vj > 0))
            throw PositivityError(
                "cole_hopf: heat-side field must stay strictly positive (first "
                "violation at node " +
                std::to_string(j) + ")");
        logv[static_cast<size_t>(j)] = std::log(vj);
    }
    std::vector<double> dlogv = gradient(g, logv);
    std::vector<double> u(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) u[static_cast<size_t>(j)] = -2 * nu * dlogv[static_cast<size_t>(j)];
    u.front() = 0.0;
    u.back() = 0.0;
    return Field(Grid1D(n, BoundaryKind::Dirichlet), std::move(u), f.time_tag);
}

namespace {

ModalRepr heat_side_modes(const Field& ic, double nu, int n_modes) {
    const Field v0 = cole_hopf(ic, nu, ColeHopfDirection::ToHeat);
    return analyze(v0, ModalBasis::Cosine, n_modes + 1);
}

Field from_modes(ModalRepr m, const std::vector<double>& factors, double nu,
                 double time_tag) {
    for (std::size_t k = 0; k < m.coeffs.size(); ++k) m.coeffs[k] *= factors[k];
    Field v = synthesize(m, time_tag);
    return cole_hopf(v, nu, ColeHopfDirection::FromHeat);
}

}  // namespace

Field cole_hopf_evolve(const Field& ic, double nu, double t, int n_modes) {
    if (t < 0) throw PreconditionError("cole_hopf_evolve: t must be >= 0");
    ModalRepr m = heat_side_modes(ic, nu, n_modes);
    std::vector<double> decay(m.coeffs.size());
    for (std::size_t k = 0; k < decay.size(); ++k)
        decay[k] = std::exp(-nu * (k * kPi) * (k * kPi) * t);
    return from_modes(std::move(m), decay, nu, t);
}

double k0_wellposedness_check(const Field& ic, double nu, double T, int n_modes,
                              double cap) {
    if (!(nu > 0) || !(T > 0))
        throw PreconditionError("k0_wellposedness_check: need nu > 0 and T > 0");
    if (n_modes < 1)
        throw PreconditionError("k0_wellposedness_check: need at least one mode");
    if (cap <= 0) throw PreconditionError("k0_wellposedness_check: cap must be > 0");
    const double worst = nu * (kPi * n_modes) * (kPi * n_modes) * T;
    if (worst > cap) {
        int refused = 0;
        for (int k = 1; k <= n_modes; ++k)
            if (nu * (kPi * k) * (kPi * k) * T > cap) refused += 1;
        throw TruncationError(
            "k0_wellposedness_check: mode " + std::to_string(n_modes) +
                " needs amplification exponent " + std::to_string(worst) +
                " past the cap " + std::to_string(cap) +
                " (Proposition 3, docs/theory.md)",
            refused, n_modes);
    }

    const ModalRepr m0 = heat_side_modes(ic, nu, n_modes);
    const std::size_t nm = m0.coeffs.size();
    std::vector<double> lam(nm);
    for (std::size_t k = 0; k < nm; ++k) lam[k] = nu * (k * kPi) * (k * kPi);

    double worst_rel = 0;
    for (int s = 0; s <= 10; ++s) {
        const double t = T * s / 10;
        std::vector<double> fwd(nm), bwd(nm);
        for (std::size_t k = 0; k < nm; ++k) {
            fwd[k] = std::exp(-lam[k] * t);
            // Backward reconstruction: decay to T first, then amplify back.
            bwd[k] = std::exp(-lam[k] * T) * std::exp(lam[k] * (T - t));
        }
        const Field u = from_modes(m0, fwd, nu, t);
        const Field ut = from_modes(m0, bwd, nu, t);
        const double denom = l2_norm(u);
        const double diff = l2_norm(ut - u);
        worst_rel = std::max(worst_rel, denom > 0 ? diff / denom : diff);
    }
    return worst_rel;
}

namespace {

/// log(e^alpha - 1) for alpha > 0 without overflow.
double log_expm1(double alpha) {
    if (alpha <= 36.0) return std::log(std::expm1(alpha));
    return alpha + std::log1p(-std::exp(-alpha));
}

LogComplex log_sum(const std::vector<LogComplex>& terms) {
    double peak = -std::numeric_limits<double>::infinity();
    for (const LogComplex& t : terms) peak = std::max(peak, t.log_abs);
    LogComplex out;
    if (!std::isfinite(peak)) return out;  // empty or all-zero sum
    std::complex<double> acc = 0;
    for (const LogComplex& t : terms)
        acc += std::exp(t.log_abs - peak) *
               std::complex<double>(std::cos(t.phase), std::sin(t.phase));
    const double mag = std::abs(acc);
    if (mag == 0.0) return out;
    out.log_abs = peak + std::log(mag);
    out.phase = std::arg(acc);
    return out;
}

}  // namespace

BnSequence bn_sequence(const std::vector<std::complex<double>>& a, double K,
                       double Kp, double nu, double T) {
    if (a.empty()) throw PreconditionError("bn_sequence: need at least one coefficient");
    if (K < 0 || Kp < 0 || nu < 0 || !(T > 0))
        throw PreconditionError("bn_sequence: need K, K', nu >= 0 and T > 0");

    const int N = static_cast<int>(a.size());
    BnSequence seq;
    seq.a = a;
    seq.K = K;
    seq.Kp = Kp;
    seq.nu = nu;
    seq.T = T;
    seq.b.assign(static_cast<std::size_t>(2 * N - 1), LogComplex{});
    seq.b_under.assign(static_cast<std::size_t>(2 * N - 1), LogComplex{});
    seq.growth.assign(static_cast<std::size_t>(2 * N - 1), 0.0);

    // K = K' = 0 zeroes the prefactor e^{-2(K+K')T} - 1 exactly.
    const bool zero_gain = (K == 0.0 && Kp == 0.0);

    const double pref_mag = zero_gain ? -std::numeric_limits<double>::infinity()
                                      : std::log(-std::expm1(-2 * (K + Kp) * T));
    // expm1 of a negative argument is negative: the prefactor flips the sign.
    const double pref_phase = kPi;
    const double pref_b_extra = (-Kp + K) * T;

    std::vector<LogComplex> terms_b, terms_u;
    for (int n = 2; n <= 2 * N; ++n) {
        const std::size_t idx = static_cast<std::size_t>(n - 2);
        if (zero_gain) {
            seq.growth[idx] = -std::numeric_limits<double>::infinity();
            continue;
        }
        terms_b.clear();
        terms_u.clear();
        for (int p = std::max(1, n - N); p <= std::min(N, n - 1); ++p) {
            const int q = n - p;
            const std::complex<double> ap = a[static_cast<std::size_t>(p - 1)];
            const std::complex<double> aq = a[static_cast<std::size_t>(q - 1)];
            const double mag = std::abs(ap) * std::abs(aq);
            if (mag == 0.0) continue;
            const double beta = 2 * Kp + K + 2 * nu * p * q;
            const double alpha = T * beta;
            const double base = std::log(mag);
            const double ph = std::arg(ap) + std::arg(aq);
            terms_b.push_back({base + log_expm1(alpha) - std::log(beta), ph});
            terms_u.push_back({base + alpha - std::log(beta), ph});
        }
        LogComplex sb = log_sum(terms_b);
        LogComplex su = log_sum(terms_u);
        sb.log_abs += pref_mag + pref_b_extra;
        sb.phase += pref_phase;
        su.log_abs += pref_mag;
        su.phase += pref_phase;
        seq.b[idx] = sb;
        seq.b_under[idx] = su;
        seq.growth[idx] = su.log_abs / (static_cast<double>(n) * n);
    }
    return seq;
}

}  // namespace bfn
