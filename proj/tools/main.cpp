#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bfn/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"bfnlab: back-and-forth nudging on 1-D transport equations"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "Run one nudging experiment from a config file");
    std::string run_config;
    std::string run_out = "out";
    run->add_option("--config", run_config, "Run configuration file")->required();
    run->add_option("--out", run_out, "Output directory for report.json and profile.csv");

    auto* fig = app.add_subcommand("figure1", "Decrease-rate profiles over a ladder of horizons");
    std::string fig_variant;
    std::vector<double> fig_horizons;
    std::string fig_out = "out";
    fig->add_option("--variant", fig_variant, "Equation family: linear or burgers")->required();
    fig->add_option("--T", fig_horizons, "Horizon (repeatable; default ladder 0.05 0.25 0.5 0.75 1)");
    fig->add_option("--out", fig_out, "Output directory for the csv and plt files");

    auto* ver = app.add_subcommand("verify", "Run the acceptance criteria and write verify.json");
    std::vector<int> ver_only;
    std::string ver_out = "out";
    ver->add_option("--only", ver_only, "Criterion id (repeatable; default all)");
    ver->add_option("--out", ver_out, "Output directory for verify.json");

    auto* bn = app.add_subcommand("bn-growth", "Backward modal growth diagnostic for viscous Burgers");
    double bn_k = 1.0, bn_kp = 1.0, bn_nu = 1.0, bn_t = 1.0;
    int bn_n = 128;
    std::string bn_out = "out";
    bn->add_option("--K", bn_k, "Forward gain amplitude");
    bn->add_option("--Kp", bn_kp, "Backward gain amplitude");
    bn->add_option("--nu", bn_nu, "Viscosity");
    bn->add_option("--T", bn_t, "Horizon");
    bn->add_option("--N", bn_n, "Band limit of the test datum a_n = n^-2 (N <= 256)");
    bn->add_option("--out", bn_out, "Output directory for bn.csv");

    auto* ch = app.add_subcommand("colehopf-check",
                                  "Round-trip well-posedness check for the gain-free viscous Burgers sweep");
    std::string ch_ic = "sinpi 0.2";
    double ch_nu = 0.05, ch_t = 0.5, ch_cap = 300.0, ch_tol = 1e-6;
    int ch_modes = 32;
    ch->add_option("--ic", ch_ic, "Initial profile text, e.g. 'sinpi 0.2'");
    ch->add_option("--nu", ch_nu, "Viscosity");
    ch->add_option("--T", ch_t, "Horizon");
    ch->add_option("--modes", ch_modes, "Number of heat-side modes to round-trip");
    ch->add_option("--cap", ch_cap, "Largest allowed amplification exponent");
    ch->add_option("--tol", ch_tol, "Pass tolerance on the worst relative discrepancy");

    CLI11_PARSE(app, argc, argv);

    if (*run) return bfn::cmd_run(run_config, run_out);
    if (*fig) return bfn::cmd_figure1(fig_variant, fig_horizons, fig_out);
    if (*ver) return bfn::cmd_verify(ver_out, ver_only);
    if (*bn) return bfn::cmd_bn_growth(bn_k, bn_kp, bn_nu, bn_t, bn_n, bn_out);
    if (*ch) return bfn::cmd_colehopf_check(ch_ic, ch_nu, ch_t, ch_modes, ch_cap, ch_tol);
    return 1;
}
