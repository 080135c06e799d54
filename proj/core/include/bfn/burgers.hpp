#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "bfn/characteristics.hpp"
#include "bfn/field.hpp"
#include "bfn/gain.hpp"
#include "bfn/trajectory.hpp"

namespace bfn {

/// Output of a self-advecting characteristic solve: the resampled grid
/// trajectory of the state u, plus the curve bundle with u carried along it.
/// The curves are the psi of Proposition 7 (docs/theory.md): characteristics
/// of the nudged direct system.
struct BurgersRun {
    Trajectory traj;
    CharField curves;
};

/// Integrate the inviscid self-advecting system
///   du/dt + u du/dx = -/+ K(t,x) (u - u_obs)      (Forward: -K, Backward: +K')
/// from boundary_data at t=0 over [0,T], nt steps, feet at the grid nodes.
/// Both directions run upward in time: Backward is the reversed system
/// evolved forward from a candidate initial field (see
/// reverse_inviscid_burgers for producing that candidate from u(T)).
/// Per foot the pair (X, u) advances by one joint Runge-Kutta stage sweep;
/// with u_obs absent the value update is then replaced by the exact
/// integrating factor exp(∓K · chord occupation), which keeps the carried
/// ratios and chi() built from the same sums.
/// uobs, when non-null, must store every step of the same time grid.
BurgersRun solve_inviscid_burgers(SweepDirection direction, const Gain& gain,
                                  const Field& boundary_data, const Trajectory* uobs,
                                  double T, int nt);

/// Integrate the backward system du/dt + u du/dx = +K'(u - u_obs) from
/// final_data at t=T down to t=0 (the sweep that closes one BFN pair).  In
/// the integration direction the gain damps, so the sweep is stable.  The
/// returned trajectory stores final_data verbatim at t=T and resampled
/// fields below it; curve feet are the computed positions at t=0.
BurgersRun reverse_inviscid_burgers(const Gain& gain, const Field& final_data,
                                    const Trajectory* uobs, double T, int nt);

/// Proposition 7 (docs/theory.md): per foot,
///   | w(T, psi(T,x)) - w(0, x) exp(-∫K(psi) - ∫ d/dx u_obs(psi)) |
/// with both integrals by the trapezoid rule along the run's stored curves
/// and w = u - u_obs read off the carried values.  run must be the Forward
/// output produced with the same gain and uobs.
std::vector<double> proposition7_check(const Gain& gain, const BurgersRun& run,
                                       const Trajectory* uobs);

struct Theorem6Point {
    double t = 0;
    double lhs = 0;  ///< || w_tilde(t) ||
    double rhs = 0;  ///< bound e^{-(K+K')|window ∩ [t,T]| + M (T-t)} || w(t) ||
    bool satisfied = false;
};

/// Theorem 6 (docs/theory.md): check || w_tilde(t) || <= bound at every
/// stored time shared by the two runs.  forward_run is the Forward solve,
/// backward_run the sweep returned by reverse_inviscid_burgers; w is formed
/// by subtracting the observation snapshots (uobs null means w = u).  M
/// bounds |d/dx u_obs| over the strip; the comparison carries no slack.
std::vector<Theorem6Point> theorem6_bound_check(const Gain& gain,
                                                const BurgersRun& forward_run,
                                                const BurgersRun& backward_run,
                                                const Trajectory* uobs, double M);

/// Semi-implicit viscous solver for
///   du/dt - nu d2u/dx2 + u du/dx = -K(t,x)(u - u_obs)
/// on the Dirichlet grid: Crank-Nicolson diffusion, explicit two-step
/// (Adams-Bashforth) conservative advection 1/2 d/dx(u^2), and the nudging
/// relaxation toward u_obs(t_{n+1}) integrated exactly over each step.
/// Guards max|u| dt/dx <= 0.5 per step (StabilityError).
/// An observation trajectory produced by this same solver with K=0 and the
/// same nt is reproduced exactly from ic = u_obs(0).
Trajectory solve_viscous_burgers_forward(const Gain& gain, const Field& ic,
                                         const Trajectory* uobs, double nu,
                                         double T, int nt, int record_every = 1);

enum class ColeHopfDirection { ToHeat, FromHeat };

/// The logarithmic change of variables between the viscous self-advecting
/// state u (Dirichlet) and a positive heat-side field v (Neumann):
///   v(x) = exp(-(1/2 nu) ∫_0^x u),    u = -2 nu d/dx log v,   v(0) = 1.
/// ToHeat integrates u by an endpoint-corrected cumulative trapezoid;
/// FromHeat differentiates log v with the fourth-order gradient and snaps
/// the wall values of u back to zero.  FromHeat throws PositivityError when
/// v is not strictly positive.
Field cole_hopf(const Field& f, double nu, ColeHopfDirection direction);

/// Exact K=0 viscous evolution of ic by time t: heat-side cosine modes decay
/// by exp(-nu (k pi)^2 t) on the first n_modes+1 coefficients.
Field cole_hopf_evolve(const Field& ic, double nu, double t, int n_modes);

/// Proposition 3 (docs/theory.md): with K=K'=0 the viscous self-advecting
/// problem is well-posed both ways.  Evolves ic forward via the heat-side
/// modes, reconstructs backward by dividing out the decay factors, and
/// returns the largest relative discrepancy || u_tilde(t) - u(t) || /
/// || u(t) || over eleven stored times.  Throws TruncationError when the
/// required amplification nu (pi n_modes)^2 T exceeds cap.
double k0_wellposedness_check(const Field& ic, double nu, double T, int n_modes,
                              double cap);

/// Magnitude-phase representation of a coefficient whose modulus can exceed
/// the double range: value = exp(log_abs) * e^{i phase}.
struct LogComplex {
    double log_abs = -std::numeric_limits<double>::infinity();
    double phase = 0;

    std::complex<double> to_complex() const {
        const double m = std::exp(log_abs);
        return {m * std::cos(phase), m * std::sin(phase)};
    }
};

/// Theorem 2's coefficient sequences (docs/theory.md): from the
/// Fourier data a_n of the initial guess, the one-BFN-step image has
/// coefficients b_n and the ill-posedness witness b_under_n, n = 2..2N
/// (entry i holds n = i+2).  growth[i] = log|b_under_n| / n^2; a positive
/// limit (about nu T / 2) certifies super-polynomial growth, i.e. the
/// backward viscous problem has no solution for generic data.
struct BnSequence {
    std::vector<std::complex<double>> a;
    std::vector<LogComplex> b;
    std::vector<LogComplex> b_under;
    std::vector<double> growth;
    double K = 0, Kp = 0, nu = 0, T = 0;
};

/// Evaluate b_n = e^{(-K'+K)T}(e^{-2(K+K')T} - 1) sum_{p+q=n, p,q>=1}
/// a_p a_q (e^{(2K'+K+2 nu p q)T} - 1)/(2K'+K+2 nu p q) and the variant
/// b_under_n that keeps only the raw exponential in the numerator.  Terms
/// are accumulated in log-magnitude form so magnitudes like e^{nu n^2 T}
/// survive; K = K' = 0 gives exactly zero (vanishing prefactor).
BnSequence bn_sequence(const std::vector<std::complex<double>>& a, double K,
                       double Kp, double nu, double T);

}  // namespace bfn
