#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "bfn/array2d.hpp"
#include "bfn/field.hpp"
#include "bfn/gain.hpp"
#include "bfn/trajectory.hpp"

namespace bfn {

/// Characteristic curves psi(s, x) of a periodic transport field, stored
/// unwrapped (lifted to the real line) so that chord geometry and occupation
/// times are exact; wrap on access.
struct CharField {
    std::vector<double> feet;   ///< launch positions at times.front(), in [0,1)
    std::vector<double> times;  ///< stored times, strictly increasing
    Array2D lifted;             ///< rows: times, cols: feet; unwrapped positions
    std::optional<Array2D> carried;  ///< solution values along each curve

    int n_feet() const { return static_cast<int>(feet.size()); }
    int n_times() const { return static_cast<int>(times.size()); }
    double total_time() const { return times.back() - times.front(); }
    double position(std::size_t i, std::size_t j) const { return wrap01(lifted(i, j)); }
};

/// Static velocity profile a(x) sampled on a periodic grid.
struct ProfileVelocity {
    Grid1D grid;
    std::vector<double> samples;
};
/// Velocity read off a stored solution, linear interpolation in t and x.
struct FrozenVelocity {
    const Trajectory* flow = nullptr;
};
using TraceVelocity = std::variant<ProfileVelocity, FrozenVelocity>;

/// Integrate d psi/ds = velocity(s, psi) from each foot over [0,T] with nt
/// classical Runge-Kutta steps, storing every step.  Throws CrossingError if
/// the curves lose their cyclic ordering at any stored time.
CharField trace(const TraceVelocity& velocity, const std::vector<double>& feet,
                double T, int nt);

/// Time spent by the straight chord from x0 to x1 (traversed in dt) inside
/// the torus arc [a,b].  Exact for the chord: the indicator is integrated in
/// closed form, so boundary touching counts as measure zero, not a sample.
double occupation_segment(double x0, double x1, double dt, double a, double b);

/// Per-foot integral over s in [t_from, t_to] of the gain's indicator
/// 1_window(s) * 1_support(psi(s, x_j)) along the stored curves, treating
/// each stored step as a straight chord.  Chords are clipped exactly at the
/// window endpoints and at t_from / t_to.
std::vector<double> gain_occupation(const Gain& gain, const CharField& cf,
                                    double t_from, double t_to,
                                    bool ignore_window = false);

/// chi(x) = integral over [0,T] of 1_support(psi(s,x)) ds.  Purely spatial:
/// any temporal window on the gain is ignored.  Shares its chord sums with
/// the carrying solver so rate-versus-chi comparisons isolate theory, not
/// quadrature mismatch.
std::vector<double> chi(const Gain& gain, const CharField& cf);

struct ObservabilityCertificate {
    double m = 0;       ///< min over feet of chi
    bool observable = false;
    double K_threshold = 0;  ///< M*T/m when observable, +inf otherwise
};

/// Remark 1 (docs/theory.md): every curve must spend a uniformly positive
/// time inside the observed region; the gain then wins against the M*T
/// stretching budget once K > M*T/m.
ObservabilityCertificate observability_certificate(const Gain& gain,
                                                   const CharField& cf, double M,
                                                   double tol_m = 1e-9);

enum class SweepDirection { Forward, Backward };

/// Per-foot nudged values along the stored curves.
///
/// Forward solves du/ds = -K(s,psi)(u - u_obs) upward from start_values given
/// at times.front(); Backward solves the reversed system du/ds = +K'(s,psi)
/// (u - u_obs) downward from start_values given at times.back(), which
/// realizes the backward sweep as damping in the direction of integration.
/// With uobs null the per-step update is the exact integrating factor built
/// on the chord occupation; otherwise a Runge-Kutta step with the
/// observation trajectory interpolated in t and x.
Array2D carry_along(const Gain& gain, SweepDirection dir, const CharField& cf,
                    const std::vector<double>& start_values,
                    const Trajectory* uobs = nullptr);

/// Solve the inviscid linear problem along the traced curves and resample
/// onto boundary_data's grid at every stored time.  Forward takes
/// boundary_data at t = times.front(); Backward takes it at t = times.back()
/// and integrates down.  uobs null means no observations.
Trajectory solve_inviscid_linear(const Gain& gain, SweepDirection direction,
                                 const Field& boundary_data, const Trajectory* uobs,
                                 const CharField& cf);

/// Theorem 4 (docs/theory.md): predicted ratio w_tilde(t)/w(t) along each
/// curve after one forward/backward pair over [0,T]:
/// exp(-(1+kappa) * K * occupation of [t,T]).  Constant gains reduce to the
/// scalar exp(-(K+K')(T-t)), windowed gains to exp(-(K+K')|[t,T] ∩ window|).
std::vector<double> theorem4_oracle(const Gain& gain, const CharField& cf,
                                    double t, double T);

/// First time a characteristic crossing can form: -1/min(du0/dx) when the
/// minimum slope is negative, +inf otherwise.
double shock_time(const Field& u0);

}  // namespace bfn
