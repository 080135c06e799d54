#pragma once

#include "bfn/equation.hpp"
#include "bfn/field.hpp"
#include "bfn/gain.hpp"
#include "bfn/trajectory.hpp"

namespace bfn {

/// Sign of the nudging term: the forward sweep damps the error, the backward
/// sweep (run as a forward evolution of the reversed system) amplifies it.
enum class NudgeSign { Damping, AntiDamping };

/// Integrate the error equation
///   dw/dt = nu d2w/dx2 - c dw/dx + s K(t,x) w,   s = -1 or +kappa
/// from the initial error ic over [0, spec.T] in nt steps.
///
/// ic is the error w(0) = u(0) - u_obs(0).  When uobs is non-null its stored
/// snapshots are added back at every recorded time, so the returned
/// trajectory holds the state u; obs snapshots must exist at exactly the
/// recorded times.  With uobs null the trajectory holds w itself.
///
/// Zero advection with a constant-in-space gain integrates mode-by-mode in
/// the sine basis (exact in space, exact in the gain); otherwise a
/// Crank-Nicolson step with Strang-split exact gain factors is used.
/// Rejects inviscid and self-advecting specs: those regimes belong to the
/// characteristic solvers.
Trajectory solve_forward_linear(const EquationSpec& spec, const Gain& gain,
                                NudgeSign sign, const Field& ic,
                                const Trajectory* uobs, int nt,
                                int record_every = 1);

struct BackwardModalResult {
    Field initial;      ///< reconstructed w(0), refused modes zeroed
    int refused_modes;  ///< modes whose amplification exponent exceeded the cap
    int total_modes;
};

/// Reconstruct w(0) from w(T) for the backward system
///   dw/dt = nu d2w/dx2 + K'(t) w   (integrated from T down to 0)
/// by exact modal inversion.  Mode k requires amplification exp(nu (k pi)^2 T);
/// modes whose exponent exceeds amplification_cap are refused (zeroed).
/// Throws TruncationError when the refused modes carry more than half of the
/// energy of the final state.
BackwardModalResult backward_solve_modal(const EquationSpec& spec, const Gain& gain,
                                         const Field& final_state,
                                         double amplification_cap = 40.0);

struct ModalSweepPair {
    Trajectory forward;   ///< w(t): damping sweep snapshots
    Trajectory backward;  ///< w_tilde(t): reconstructed sweep at the same times
    int refused_modes = 0;
    int total_modes = 0;
};

/// One forward/backward nudging pair for the advection-free viscous problem,
/// computed end-to-end in sine-coefficient space: the initial error is
/// analyzed once, both legs evolve by per-step closed-form factors, and the
/// backward reconstruction inverts the heat decay per mode (modes past the
/// amplification cap are zeroed and counted).
///
/// Keeping the pair in coefficient space matters: re-analyzing a synthesized
/// w(T) injects rounding noise that the e^{nu (k pi)^2 T} inversion blows up
/// to order one (that conditioning is what backward_solve_modal faithfully
/// exposes), while here the heat factors cancel mode-by-mode and the pair
/// identity of Theorem 1 (docs/theory.md) survives to rounding.
ModalSweepPair sweep_pair_modal(const EquationSpec& spec, const Gain& gain,
                                const Field& w0, int nt, int record_every = 1,
                                double amplification_cap = 40.0);

/// Which branch of Theorem 1 (docs/theory.md) the oracle evaluates.
enum class Theorem1Case { ConstantGain, TemporalWindow };

/// Closed-form ratio || w_tilde(t) || / || w(t) || predicted by Theorem 1 for
/// the viscous advection-free problem: exp(-(K + K') * |[t,T] ∩ window|).
/// The ratio is mode-independent, so it holds field-wise, not just in norm.
/// Gains with an interval spatial support are rejected with NoOracleError:
/// Theorem 1 case 2 shows the backward problem is then ill-posed and no
/// closed form exists (see illposedness_diagnostic).
double theorem1_oracle(Theorem1Case c, const Gain& gain, double T, double t);

}  // namespace bfn
