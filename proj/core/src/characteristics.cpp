#include "bfn/characteristics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bfn/errors.hpp"
#include "bfn/interpolate.hpp"

namespace bfn {

namespace {

constexpr double kOrderingTol = 1e-12;

struct VelocityEval {
    const TraceVelocity& vel;

    double operator()(double t, double x) const {
        if (const auto* p = std::get_if<ProfileVelocity>(&vel))
            return interp_linear(p->grid, p->samples, x);
        const Trajectory* flow = std::get<FrozenVelocity>(vel).flow;
        const auto& ts = flow->times;
        if (t <= ts.front()) return interp_linear(flow->snapshots.front().grid,
                                                  flow->snapshots.front().values, x);
        if (t >= ts.back()) return interp_linear(flow->snapshots.back().grid,
                                                 flow->snapshots.back().values, x);
        const auto it = std::upper_bound(ts.begin(), ts.end(), t);
        const std::size_t i = static_cast<std::size_t>(it - ts.begin()) - 1;
        const double th = (t - ts[i]) / (ts[i + 1] - ts[i]);
        const Field& f0 = flow->snapshots[i];
        const Field& f1 = flow->snapshots[i + 1];
        return (1 - th) * interp_linear(f0.grid, f0.values, x) +
               th * interp_linear(f1.grid, f1.values, x);
    }
};

void check_ordering(const Array2D& lifted, std::size_t row, double t) {
    const std::size_t nf = lifted.cols();
    if (nf < 2) return;
    for (std::size_t j = 0; j + 1 < nf; ++j)
        if (lifted(row, j + 1) - lifted(row, j) < kOrderingTol)
            throw CrossingError(
                "characteristic curves crossed (Theorem 4, docs/theory.md)", t);
    if (lifted(row, 0) + 1.0 - lifted(row, nf - 1) < kOrderingTol)
        throw CrossingError(
            "characteristic curves crossed across the wrap (Theorem 4, "
            "docs/theory.md)", t);
}

/// Chord positions at the clipped sub-interval [lo,hi] of step [t0,t1].
double chord_at(double x0, double x1, double t0, double t1, double t) {
    return x0 + (x1 - x0) * ((t - t0) / (t1 - t0));
}

}  // namespace

CharField trace(const TraceVelocity& velocity, const std::vector<double>& feet,
                double T, int nt) {
    if (feet.empty()) throw PreconditionError("trace: need at least one foot");
    for (std::size_t j = 0; j < feet.size(); ++j) {
        if (!std::isfinite(feet[j]) || feet[j] < 0 || feet[j] >= 1)
            throw PreconditionError("trace: feet must lie in [0,1)");
        if (j > 0 && !(feet[j] > feet[j - 1]))
            throw PreconditionError("trace: feet must be strictly increasing");
    }
    if (nt < 1) throw PreconditionError("trace: nt must be >= 1");
    if (!(T > 0)) throw PreconditionError("trace: T must be > 0");
    if (const auto* p = std::get_if<ProfileVelocity>(&velocity)) {
        if (p->grid.bc != BoundaryKind::Periodic)
            throw PreconditionError("trace: velocity profile must be periodic");
        if (static_cast<int>(p->samples.size()) != p->grid.n)
            throw PreconditionError("trace: velocity sample count mismatch");
        for (double v : p->samples)
            if (!std::isfinite(v)) throw PreconditionError("trace: non-finite velocity");
    } else {
        const Trajectory* flow = std::get<FrozenVelocity>(velocity).flow;
        if (!flow) throw PreconditionError("trace: null frozen trajectory");
        flow->validate();
        if (flow->snapshots.front().grid.bc != BoundaryKind::Periodic)
            throw PreconditionError("trace: frozen trajectory must be periodic");
    }

    const VelocityEval eval{velocity};
    const std::size_t nf = feet.size();
    const double dt = T / nt;

    CharField cf;
    cf.feet = feet;
    cf.times.resize(static_cast<std::size_t>(nt) + 1);
    for (int i = 0; i <= nt; ++i) cf.times[static_cast<std::size_t>(i)] = i * dt;
    cf.times.back() = T;
    cf.lifted = Array2D(static_cast<std::size_t>(nt) + 1, nf);
    for (std::size_t j = 0; j < nf; ++j) cf.lifted(0, j) = feet[j];

    for (int i = 0; i < nt; ++i) {
        const double t = cf.times[static_cast<std::size_t>(i)];
        const std::size_t r = static_cast<std::size_t>(i);
        for (std::size_t j = 0; j < nf; ++j) {
            const double x = cf.lifted(r, j);
            const double k1 = eval(t, x);
            const double k2 = eval(t + dt / 2, x + dt / 2 * k1);
            const double k3 = eval(t + dt / 2, x + dt / 2 * k2);
            const double k4 = eval(t + dt, x + dt * k3);
            cf.lifted(r + 1, j) = x + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
        }
        check_ordering(cf.lifted, r + 1, cf.times[r + 1]);
    }
    return cf;
}

double occupation_segment(double x0, double x1, double dt, double a, double b) {
    if (dt <= 0) return 0.0;
    const double lo = std::min(x0, x1);
    const double hi = std::max(x0, x1);
    if (hi - lo < 1e-300)
        return (wrap01(x0) >= a && wrap01(x0) <= b) ? dt : 0.0;
    auto F = [a, b](double y) {
        const double fl = std::floor(y);
        return fl * (b - a) + std::clamp(y - fl, a, b) - a;
    };
    return (F(hi) - F(lo)) / (hi - lo) * dt;
}

std::vector<double> gain_occupation(const Gain& gain, const CharField& cf,
                                    double t_from, double t_to, bool ignore_window) {
    gain.check();
    const std::size_t nf = cf.feet.size();
    std::vector<double> occ(nf, 0.0);
    if (!(t_to > t_from)) return occ;
    double w1 = -std::numeric_limits<double>::infinity();
    double w2 = std::numeric_limits<double>::infinity();
    if (gain.window && !ignore_window) {
        w1 = gain.window->first;
        w2 = gain.window->second;
    }
    for (int i = 0; i + 1 < cf.n_times(); ++i) {
        const std::size_t r = static_cast<std::size_t>(i);
        const double t0 = cf.times[r], t1 = cf.times[r + 1];
        const double lo = std::max({t0, t_from, w1});
        const double hi = std::min({t1, t_to, w2});
        if (hi <= lo) continue;
        for (std::size_t j = 0; j < nf; ++j) {
            if (!gain.support) {
                occ[j] += hi - lo;
                continue;
            }
            const double x0 = chord_at(cf.lifted(r, j), cf.lifted(r + 1, j), t0, t1, lo);
            const double x1 = chord_at(cf.lifted(r, j), cf.lifted(r + 1, j), t0, t1, hi);
            occ[j] += occupation_segment(x0, x1, hi - lo, gain.support->first,
                                         gain.support->second);
        }
    }
    return occ;
}

std::vector<double> chi(const Gain& gain, const CharField& cf) {
    return gain_occupation(gain, cf, cf.times.front(), cf.times.back(),
                           /*ignore_window=*/true);
}

ObservabilityCertificate observability_certificate(const Gain& gain,
                                                   const CharField& cf, double M,
                                                   double tol_m) {
    if (M < 0) throw PreconditionError("observability_certificate: M must be >= 0");
    const std::vector<double> occ = chi(gain, cf);
    ObservabilityCertificate cert;
    cert.m = *std::min_element(occ.begin(), occ.end());
    cert.observable = cert.m > tol_m;
    cert.K_threshold = cert.observable
                           ? M * cf.total_time() / cert.m
                           : std::numeric_limits<double>::infinity();
    return cert;
}

Array2D carry_along(const Gain& gain, SweepDirection dir, const CharField& cf,
                    const std::vector<double>& start_values, const Trajectory* uobs) {
    gain.check();
    const std::size_t nf = cf.feet.size();
    const std::size_t ntimes = static_cast<std::size_t>(cf.n_times());
    if (start_values.size() != nf)
        throw PreconditionError("carry_along: start value count mismatch");

    Array2D vals(ntimes, nf);
    const bool fwd = (dir == SweepDirection::Forward);
    const std::size_t r_start = fwd ? 0 : ntimes - 1;
    for (std::size_t j = 0; j < nf; ++j) vals(r_start, j) = start_values[j];

    const TraceVelocity obs_vel{FrozenVelocity{uobs}};
    const VelocityEval obs_at{obs_vel};

    for (std::size_t step = 0; step + 1 < ntimes; ++step) {
        // Forward fills row i+1 from row i; Backward fills row i from row i+1.
        const std::size_t i = fwd ? step : ntimes - 2 - step;
        const double t0 = cf.times[i], t1 = cf.times[i + 1];
        const std::size_t src = fwd ? i : i + 1;
        const std::size_t dst = fwd ? i + 1 : i;
        for (std::size_t j = 0; j < nf; ++j) {
            const double u0 = vals(src, j);
            if (!uobs) {
                double lo = t0, hi = t1;
                if (gain.window) {
                    lo = std::max(lo, gain.window->first);
                    hi = std::min(hi, gain.window->second);
                }
                double occ = 0;
                if (hi > lo) {
                    if (!gain.support) {
                        occ = hi - lo;
                    } else {
                        const double xa =
                            chord_at(cf.lifted(i, j), cf.lifted(i + 1, j), t0, t1, lo);
                        const double xb =
                            chord_at(cf.lifted(i, j), cf.lifted(i + 1, j), t0, t1, hi);
                        occ = occupation_segment(xa, xb, hi - lo, gain.support->first,
                                                 gain.support->second);
                    }
                }
                const double rate = fwd ? gain.amplitude : gain.kappa * gain.amplitude;
                vals(dst, j) = u0 * std::exp(-rate * occ);
            } else {
                const double h = fwd ? (t1 - t0) : (t0 - t1);
                const double ta = fwd ? t0 : t1;
                auto pos = [&](double t) {
                    return chord_at(cf.lifted(i, j), cf.lifted(i + 1, j), t0, t1, t);
                };
                auto f = [&](double t, double u) {
                    const double x = pos(t);
                    const double k = fwd ? gain.evaluate(t, wrap01(x))
                                         : gain.evaluate_backward(t, wrap01(x));
                    return (fwd ? -k : k) * (u - obs_at(t, x));
                };
                const double k1 = f(ta, u0);
                const double k2 = f(ta + h / 2, u0 + h / 2 * k1);
                const double k3 = f(ta + h / 2, u0 + h / 2 * k2);
                const double k4 = f(ta + h, u0 + h * k3);
                vals(dst, j) = u0 + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
            }
        }
    }
    return vals;
}

Trajectory solve_inviscid_linear(const Gain& gain, SweepDirection direction,
                                 const Field& boundary_data, const Trajectory* uobs,
                                 const CharField& cf) {
    const Grid1D& g = boundary_data.grid;
    if (g.bc != BoundaryKind::Periodic)
        throw PreconditionError("solve_inviscid_linear: periodic grid required");
    const bool fwd = (direction == SweepDirection::Forward);
    const std::size_t nf = cf.feet.size();
    const std::size_t bnd = fwd ? 0 : static_cast<std::size_t>(cf.n_times()) - 1;

    // Feet at the grid nodes read the boundary values directly; anything else
    // interpolates at the curves' boundary-time positions.
    bool feet_are_nodes = (static_cast<int>(nf) == g.n);
    if (feet_are_nodes)
        for (std::size_t j = 0; j < nf; ++j)
            if (std::abs(cf.feet[j] - g.node(static_cast<int>(j))) > 1e-12) {
                feet_are_nodes = false;
                break;
            }
    std::vector<double> start(nf);
    for (std::size_t j = 0; j < nf; ++j) {
        if (fwd && feet_are_nodes)
            start[j] = boundary_data[j];
        else
            start[j] = interp_cubic(g, boundary_data.values, cf.position(bnd, j));
    }

    const Array2D vals = carry_along(gain, direction, cf, start, uobs);

    Trajectory out;
    out.spec.nu = 0;
    out.spec.bc = BoundaryKind::Periodic;
    out.spec.T = cf.times.back();
    out.times = cf.times;
    out.snapshots.reserve(vals.rows());
    for (std::size_t i = 0; i < vals.rows(); ++i) {
        if (i == bnd) {
            Field f = boundary_data;
            f.time_tag = cf.times[i];
            out.snapshots.push_back(std::move(f));
            continue;
        }
        std::vector<double> pos(nf);
        for (std::size_t j = 0; j < nf; ++j) pos[j] = cf.position(i, j);
        out.snapshots.push_back(
            resample_periodic(pos, vals.row_copy(i), g, cf.times[i]));
    }
    out.validate();
    return out;
}

std::vector<double> theorem4_oracle(const Gain& gain, const CharField& cf, double t,
                                    double T) {
    if (!(t >= cf.times.front() - 1e-12) || !(T <= cf.times.back() + 1e-12) || t > T)
        throw PreconditionError("theorem4_oracle: need times.front() <= t <= T <= times.back()");
    const double keff = (1.0 + gain.kappa) * gain.amplitude;
    std::vector<double> occ = gain_occupation(gain, cf, t, T);
    for (double& o : occ) o = std::exp(-keff * o);
    return occ;
}

double shock_time(const Field& u0) {
    if (u0.grid.bc != BoundaryKind::Periodic)
        throw PreconditionError("shock_time: periodic grid required");
    const std::vector<double> d = gradient(u0.grid, u0.values);
    const double ms = *std::min_element(d.begin(), d.end());
    double amp = 0.0;
    for (double v : u0.values) amp = std::max(amp, std::abs(v));
    // The stencil leaves O(eps*|u|/h) rounding residue on slope-free profiles.
    const double tiny = 64.0 * std::numeric_limits<double>::epsilon() * amp / u0.grid.dx();
    if (ms < -tiny) return -1.0 / ms;
    return std::numeric_limits<double>::infinity();
}

}  // namespace bfn
