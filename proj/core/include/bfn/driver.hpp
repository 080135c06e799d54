#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bfn/characteristics.hpp"
#include "bfn/equation.hpp"
#include "bfn/field.hpp"
#include "bfn/gain.hpp"
#include "bfn/profiles.hpp"

namespace bfn {

/// Full description of one nudging experiment. Initial states are analytic
/// profiles by default; raw nodal samples override them when present.
struct BfnConfig {
    EquationSpec spec;
    Gain gain;
    AnalyticProfile u0;
    AnalyticProfile uobs0;
    std::optional<std::vector<double>> u0_samples;
    std::optional<std::vector<double>> uobs0_samples;
    int iterations = 1;
    int grid_n = 512;
    int nt = 2048;
    int record_every = 1;

    void check() const;
};

struct IterationRecord {
    double w0_norm = 0;       ///< ||u - u_obs|| at t = 0 entering the sweep pair
    double wT_norm = 0;       ///< after the forward sweep
    double wtilde0_norm = 0;  ///< after the backward sweep, the next iterate
};

/// Everything one run produces: per-iteration error norms, the first
/// iteration's initial errors before and after the sweep pair, the per-node
/// decrease-rate profile, deviations from the applicable closed-form
/// predictions, and diagnostic flags.
struct BfnReport {
    std::vector<IterationRecord> iterations;
    Field w0;
    Field wtilde0;
    std::vector<double> rate;        ///< NaN where the node is excluded
    std::vector<int> excluded_nodes;
    std::map<std::string, double> oracle_deviations;
    std::optional<ObservabilityCertificate> certificate;
    int truncated_modes = 0;
};

/// Run `iterations` forward/backward sweep pairs of the nudging scheme.
///
/// Dispatch: viscous linear problems use the modal / Crank-Nicolson solver
/// with the closed-form backward reconstruction; inviscid linear problems
/// carry errors along traced characteristics; inviscid self-advecting
/// problems use the characteristic solver of the nudged equation itself.
/// Observations are always produced internally by the gain-free forward
/// solver from uobs0.
///
/// Refused regimes throw UnsupportedRegime naming the governing result and
/// the diagnostic that quantifies it (see docs/theory.md).
BfnReport run_bfn(const BfnConfig& cfg);

/// Per-node -log(wtilde0 / w0). Nodes where |w0| sits below 1e-10 * max|w0|
/// or where the ratio is not positive are emitted as NaN.
std::vector<double> decrease_rate_profile(const Field& w0, const Field& wtilde0);

struct IllposednessDiagnostic {
    double residual = 0;            ///< best band-limited reconstruction mismatch
    double reference_residual = 0;  ///< same pipeline, full-support gain
    double ratio = 0;
};

/// Witness for the ill-posedness of the backward sweep under an interval
/// gain support (Theorem 1 case 2, docs/theory.md): evolve w0 forward with
/// the damping sweep, then seek the least-squares preimage of w(T) among
/// band-limited states evolved by the ascending backward system. The band
/// keeps the modes whose heat amplification over [0,T] stays below
/// amplification_cap. A full-support gain admits an exact preimage, so its
/// residual is pure discretization noise and serves as the reference.
IllposednessDiagnostic illposedness_diagnostic(const EquationSpec& spec,
                                               const Gain& gain, const Field& w0,
                                               int nt = 256,
                                               double amplification_cap = 40.0);

/// Deviation recorded for one closed-form prediction ("theorem1_case1",
/// "theorem1_case3", "theorem4", "theorem6", "proposition7"); NoOracleError
/// if the run had no such prediction.
double oracle_deviation(const BfnReport& report, const std::string& case_id);

}  // namespace bfn
