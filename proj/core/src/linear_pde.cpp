#include "bfn/linear_pde.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "bfn/errors.hpp"
#include "bfn/modal.hpp"
#include "tridiag.hpp"

namespace bfn {

namespace {

using detail::Tridiag;

constexpr double kPi = std::numbers::pi;

double advection_speed(const EquationSpec& spec) {
    if (spec.is_burgers())
        throw UnsupportedRegime(
            "solve_forward_linear: self-advection is nonlinear; viscous Burgers "
            "sweeps are ruled out by Theorem 2 (docs/theory.md, see bn-growth) "
            "except for K = 0 (see colehopf-check)");
    if (std::holds_alternative<ProfileAdvection>(spec.advection))
        throw UnsupportedRegime(
            "solve_forward_linear: variable advection with viscosity has no exact "
            "integrator here; inviscid variable advection is handled along "
            "characteristics (Theorem 4, docs/theory.md)");
    return std::get<ConstantAdvection>(spec.advection).speed;
}

void require_viscous_linear(const EquationSpec& spec) {
    spec.check();
    if (spec.nu <= 0)
        throw UnsupportedRegime(
            "solve_forward_linear: inviscid transport is integrated along "
            "characteristics (Theorem 4, docs/theory.md), not by the viscous "
            "solver");
}

}  // namespace

Trajectory solve_forward_linear(const EquationSpec& spec, const Gain& gain,
                                NudgeSign sign, const Field& ic,
                                const Trajectory* uobs, int nt, int record_every) {
    require_viscous_linear(spec);
    const double c = advection_speed(spec);
    gain.check();
    if (ic.grid.bc != BoundaryKind::Dirichlet)
        throw PreconditionError("solve_forward_linear: initial error must live on the Dirichlet grid");
    if (nt < 1) throw PreconditionError("solve_forward_linear: nt must be >= 1");
    if (record_every < 1 || nt % record_every != 0)
        throw PreconditionError("solve_forward_linear: record_every must divide nt");
    if (uobs && uobs->snapshots.front().grid != ic.grid)
        throw PreconditionError("solve_forward_linear: observation grid mismatch");

    const Grid1D& g = ic.grid;
    const int n = g.n;
    const double T = spec.T;
    const double dt = T / nt;
    // Damping applies -K (the forward sweep); AntiDamping applies +K' with
    // K' = kappa K, the ascending realization of the backward sweep.
    const double sgn = (sign == NudgeSign::Damping) ? -1.0 : gain.kappa;

    Trajectory out;
    out.spec = spec;
    out.times.push_back(0.0);
    if (uobs)
        out.snapshots.push_back(ic + uobs->at_time(0.0));
    else
        out.snapshots.push_back(ic);
    out.snapshots.back().time_tag = 0.0;

    auto record = [&](int step, const std::vector<double>& w) {
        const double t = step * dt;
        Field f(g, w, t);
        if (uobs) f = f + uobs->at_time(t);
        f.time_tag = t;
        out.times.push_back(t);
        out.snapshots.push_back(std::move(f));
    };

    const bool modal = (c == 0.0) && gain.full_support();
    if (modal) {
        ModalRepr m = analyze(ic, ModalBasis::Sine);
        const int nm = m.n_modes();
        std::vector<double> heat(nm);
        for (int k = 1; k <= nm; ++k)
            heat[k - 1] = std::exp(-spec.nu * (k * kPi) * (k * kPi) * dt);
        for (int i = 0; i < nt; ++i) {
            const double over = gain.window_overlap(i * dt, (i + 1) * dt);
            const double gfac = std::exp(sgn * gain.amplitude * over);
            for (int k = 0; k < nm; ++k) m.coeffs[k] *= gfac * heat[k];
            if ((i + 1) % record_every == 0)
                record(i + 1, synthesize(m).values);
        }
    } else {
        const double h = g.dx();
        const double alpha = spec.nu * dt / (2 * h * h);
        const double beta = c * dt / (4 * h);
        const std::size_t m = static_cast<std::size_t>(n - 2);
        Tridiag A;
        A.sub.assign(m, -alpha - beta);
        A.diag.assign(m, 1 + 2 * alpha);
        A.sup.assign(m, -alpha + beta);
        A.factorize();

        std::vector<double> w(ic.values);
        std::vector<double> kx(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) kx[j] = gain.in_support(g.node(j)) ? gain.amplitude : 0.0;

        std::vector<double> rhs(m), wn(static_cast<std::size_t>(n), 0.0);
        for (int i = 0; i < nt; ++i) {
            const double over = gain.window_overlap(i * dt, (i + 1) * dt);
            for (int j = 1; j < n - 1; ++j) w[j] *= std::exp(sgn * kx[j] * over / 2);
            for (std::size_t j = 0; j < m; ++j) {
                const double wl = w[j], wc = w[j + 1], wr = w[j + 2];
                rhs[j] = (alpha + beta) * wl + (1 - 2 * alpha) * wc + (alpha - beta) * wr;
            }
            A.solve(rhs);
            for (std::size_t j = 0; j < m; ++j) wn[j + 1] = rhs[j];
            for (int j = 1; j < n - 1; ++j) w[j] = wn[j] * std::exp(sgn * kx[j] * over / 2);
            if ((i + 1) % record_every == 0) record(i + 1, w);
        }
    }

    out.validate();
    return out;
}

BackwardModalResult backward_solve_modal(const EquationSpec& spec, const Gain& gain,
                                         const Field& final_state,
                                         double amplification_cap) {
    require_viscous_linear(spec);
    if (advection_speed(spec) != 0.0)
        throw PreconditionError("backward_solve_modal: requires zero advection");
    gain.check();
    if (!gain.full_support())
        throw PreconditionError(
            "backward_solve_modal: gains with interval spatial support make the "
            "backward problem ill-posed (Theorem 1 case 2, docs/theory.md); use "
            "illposedness_diagnostic instead");
    if (amplification_cap <= 0)
        throw PreconditionError("backward_solve_modal: amplification_cap must be > 0");

    const double T = spec.T;
    const double kp = gain.kappa * gain.amplitude;
    const double W = gain.window_overlap(0.0, T);

    ModalRepr m = analyze(final_state, ModalBasis::Sine);
    const int nm = m.n_modes();
    int refused = 0;
    double refused_energy = 0, total_energy = 0;
    for (int k = 1; k <= nm; ++k) {
        const double e = spec.nu * (k * kPi) * (k * kPi) * T;
        const double a2 = std::norm(m.coeffs[k - 1]);
        total_energy += a2;
        if (e > amplification_cap) {
            refused += 1;
            refused_energy += a2;
            m.coeffs[k - 1] = 0.0;
        } else {
            m.coeffs[k - 1] *= std::exp(e - kp * W);
        }
    }
    if (refused_energy > 0.5 * total_energy)
        throw TruncationError(
            "backward_solve_modal: refused modes carry more than half of the "
            "final state's energy (amplification cap " +
                std::to_string(amplification_cap) + ")",
            refused, nm);

    Field initial = synthesize(m, 0.0);
    return BackwardModalResult{std::move(initial), refused, nm};
}

ModalSweepPair sweep_pair_modal(const EquationSpec& spec, const Gain& gain,
                                const Field& w0, int nt, int record_every,
                                double amplification_cap) {
    require_viscous_linear(spec);
    if (advection_speed(spec) != 0.0)
        throw PreconditionError("sweep_pair_modal: requires zero advection");
    gain.check();
    if (!gain.full_support())
        throw PreconditionError(
            "sweep_pair_modal: gains with interval spatial support make the "
            "backward problem ill-posed (Theorem 1 case 2, docs/theory.md); use "
            "illposedness_diagnostic instead");
    if (amplification_cap <= 0)
        throw PreconditionError("sweep_pair_modal: amplification_cap must be > 0");
    if (w0.grid.bc != BoundaryKind::Dirichlet)
        throw PreconditionError("sweep_pair_modal: initial error must live on the Dirichlet grid");
    if (nt < 1) throw PreconditionError("sweep_pair_modal: nt must be >= 1");
    if (record_every < 1 || nt % record_every != 0)
        throw PreconditionError("sweep_pair_modal: record_every must divide nt");

    const double T = spec.T;
    const double dt = T / nt;
    const double kp = gain.kappa * gain.amplitude;
    const double W = gain.window_overlap(0.0, T);

    const ModalRepr m0 = analyze(w0, ModalBasis::Sine);
    const int nm = m0.n_modes();
    std::vector<double> heat(static_cast<std::size_t>(nm));
    for (int k = 1; k <= nm; ++k)
        heat[k - 1] = std::exp(-spec.nu * (k * kPi) * (k * kPi) * dt);

    // Evolve m with per-step heat and gain factors, recording snapshots; m is
    // left holding the final coefficients.
    auto run_leg = [&](ModalRepr& m, double sgn_amplitude) {
        Trajectory leg;
        leg.spec = spec;
        leg.times.push_back(0.0);
        leg.snapshots.push_back(synthesize(m, 0.0));
        for (int i = 0; i < nt; ++i) {
            const double over = gain.window_overlap(i * dt, (i + 1) * dt);
            const double gfac = std::exp(sgn_amplitude * over);
            for (int k = 0; k < nm; ++k) m.coeffs[k] *= heat[k] * gfac;
            if ((i + 1) % record_every == 0) {
                const double t = (i + 1) * dt;
                leg.times.push_back(t);
                leg.snapshots.push_back(synthesize(m, t));
            }
        }
        leg.validate();
        return leg;
    };

    ModalSweepPair out;
    out.total_modes = nm;
    ModalRepr mf = m0;
    out.forward = run_leg(mf, -gain.amplitude);

    // Reconstruct w_tilde(0) by inverting the heat decay on the forward
    // coefficients themselves. Their rounding error is multiplicative, so the
    // amplification keeps it relative instead of blowing it up.
    ModalRepr mb = mf;
    double refused_energy = 0, total_energy = 0;
    for (int k = 1; k <= nm; ++k) {
        const double e = spec.nu * (k * kPi) * (k * kPi) * T;
        const double a2 = std::norm(mf.coeffs[k - 1]);
        total_energy += a2;
        if (e > amplification_cap) {
            out.refused_modes += 1;
            refused_energy += a2;
            mb.coeffs[k - 1] = 0.0;
        } else {
            mb.coeffs[k - 1] = mf.coeffs[k - 1] * std::exp(e - kp * W);
        }
    }
    if (refused_energy > 0.5 * total_energy)
        throw TruncationError(
            "sweep_pair_modal: refused modes carry more than half of the final "
            "state's energy (amplification cap " +
                std::to_string(amplification_cap) + ")",
            out.refused_modes, nm);

    out.backward = run_leg(mb, kp);
    return out;
}

double theorem1_oracle(Theorem1Case c, const Gain& gain, double T, double t) {
    gain.check();
    if (!(T > 0) || t < 0 || t > T)
        throw PreconditionError("theorem1_oracle: need 0 <= t <= T");
    if (!gain.full_support())
        throw NoOracleError(
            "theorem1_oracle: no closed form exists for gains with interval "
            "spatial support (Theorem 1, case 2: the backward problem is "
            "ill-posed); see illposedness_diagnostic");
    switch (c) {
        case Theorem1Case::ConstantGain:
            if (gain.window)
                throw PreconditionError(
                    "theorem1_oracle: gain carries a temporal window; use the "
                    "TemporalWindow case");
            break;
        case Theorem1Case::TemporalWindow:
            if (!gain.window)
                throw PreconditionError(
                    "theorem1_oracle: TemporalWindow case requires a windowed gain");
            break;
    }
    const double keff = (1.0 + gain.kappa) * gain.amplitude;
    return std::exp(-keff * gain.window_overlap(t, T));
}

}  // namespace bfn
