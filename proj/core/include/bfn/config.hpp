#pragma once

#include <istream>
#include <string>

#include "bfn/driver.hpp"

namespace bfn {

/// Parse a flat key = value run configuration ('#' starts a comment).
///
/// Keys: equation (linear|burgers), viscosity, advection ("constant <v>" or
/// an analytic profile, linear equations only), bc (dirichlet|periodic), T,
/// grid_n, nt, gain_amplitude, kappa, gain_support (full | a,b), gain_window
/// (full | t1,t2), u0, uobs0 (analytic profile text), iterations.
///
/// Required: equation, viscosity, T, gain_amplitude, u0. Defaults: grid_n
/// 512, nt 2048, kappa 1, iterations 1, uobs0 zero, gain_support full,
/// gain_window full, advection "constant 1", bc implied by the viscosity.
/// Unknown keys are rejected. All numbers are parsed locale-independently.
BfnConfig parse_run_config(std::istream& in);

/// parse_run_config on the contents of the file at path.
BfnConfig load_run_config(const std::string& path);

}  // namespace bfn
