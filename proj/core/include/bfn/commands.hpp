#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace bfn {

/// Execute the run described by the config file; writes report.json and
/// profile.csv into out_dir. Returns 0 on success, 2 when the regime is
/// refused by theory (the message on err names the governing result), 1 on
/// any other error.
int cmd_run(const std::string& config_path, const std::string& out_dir,
            std::ostream& out = std::cout, std::ostream& err = std::cerr);

/// Decrease-rate ladder over the horizons for the half-interval gain setup;
/// writes figure1_<variant>.csv and figure1_<variant>.plt into out_dir.
/// variant is "linear" (amplitude 1) or "burgers" (amplitude 0.2, reduced
/// automatically when the largest horizon would reach the crossing time; the
/// choice is printed and recorded in the plt header). Empty horizons run the
/// default ladder 0.05, 0.25, 0.5, 0.75, 1.
int cmd_figure1(const std::string& variant, std::vector<double> horizons,
                const std::string& out_dir, std::ostream& out = std::cout,
                std::ostream& err = std::cerr);

/// Run the verification criteria (all of them, or the ids in `only`) and
/// write verify.json into out_dir. Returns 0 iff every executed criterion
/// passed; otherwise prints the first failure on err and returns 1.
int cmd_verify(const std::string& out_dir, const std::vector<int>& only = {},
               std::ostream& out = std::cout, std::ostream& err = std::cerr);

/// Tabulate the backward modal coefficients for a_n = n^{-2}; writes bn.csv
/// into out_dir and prints the growth classification against the threshold
/// 0.4 nu T.
int cmd_bn_growth(double K, double Kp, double nu, double T, int N,
                  const std::string& out_dir, std::ostream& out = std::cout,
                  std::ostream& err = std::cerr);

/// Gain-free viscous self-advecting backward solvability check: prints the
/// worst relative discrepancy between the decayed state and its backward
/// reconstruction and compares it against tol.
int cmd_colehopf_check(const std::string& ic_text, double nu, double T,
                       int n_modes, double cap, double tol,
                       std::ostream& out = std::cout,
                       std::ostream& err = std::cerr);

}  // namespace bfn
