#include "bfn/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include <json.hpp>

#include "bfn/burgers.hpp"
#include "bfn/config.hpp"
#include "bfn/driver.hpp"
#include "bfn/errors.hpp"
#include "bfn/report_io.hpp"
#include "bfn/verification.hpp"

namespace bfn {

namespace {

std::filesystem::path prepare_out_dir(const std::string& out_dir) {
    std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    return dir;
}

int report_failure(const std::exception& e, std::ostream& err) {
    err << e.what() << '\n';
    if (dynamic_cast<const UnsupportedRegime*>(&e)) return 2;
    return 1;
}

}  // namespace

int cmd_run(const std::string& config_path, const std::string& out_dir,
            std::ostream& out, std::ostream& err) {
    try {
        const BfnConfig cfg = load_run_config(config_path);
        const auto dir = prepare_out_dir(out_dir);
        const BfnReport report = run_bfn(cfg);
        write_report_json(report, (dir / "report.json").string());
        write_profile_csv(report, (dir / "profile.csv").string());
        out << "run: wrote report.json and profile.csv to " << dir.string() << '\n';
        return 0;
    } catch (const std::exception& e) {
        return report_failure(e, err);
    }
}

int cmd_figure1(const std::string& variant, std::vector<double> horizons,
                const std::string& out_dir, std::ostream& out, std::ostream& err) {
    try {
        if (variant != "linear" && variant != "burgers")
            throw PreconditionError("figure1: variant must be 'linear' or 'burgers'");
        if (horizons.empty()) horizons = {0.05, 0.25, 0.5, 0.75, 1.0};
        for (double T : horizons)
            if (!(T > 0)) throw PreconditionError("figure1: horizons must be positive");

        const bool burgers = variant == "burgers";
        double alpha = burgers ? 0.2 : 1.0;
        std::string note;
        if (burgers) {
            const double t_max = *std::max_element(horizons.begin(), horizons.end());
            // Keep every horizon short of the crossing time 1/(2 pi alpha)
            // with a 10% margin (Theorem 6 scope, docs/theory.md).
            const double alpha_limit = 0.9 / (2.0 * std::numbers::pi * t_max);
            if (alpha > alpha_limit) {
                alpha = alpha_limit;
                note = "amplitude reduced to " + format_double(alpha) +
                       " so the largest horizon stays below the crossing time";
                out << "figure1: " << note << '\n';
            }
        }

        const Grid1D g(512, BoundaryKind::Periodic);
        std::vector<std::vector<double>> rates;
        rates.reserve(horizons.size());
        for (double T : horizons) {
            BfnConfig cfg;
            cfg.spec.nu = 0.0;
            cfg.spec.bc = BoundaryKind::Periodic;
            cfg.spec.T = T;
            if (burgers)
                cfg.spec.advection = SelfAdvection{};
            else
                cfg.spec.advection = ConstantAdvection{1.0};
            cfg.gain = Gain::spatial(1.0, 0.0, 0.5);
            cfg.u0 = AnalyticProfile{AnalyticProfile::Shape::Sin2Pi, alpha, 0.0, 0.0};
            cfg.grid_n = g.n;
            cfg.nt = 2048;
            rates.push_back(run_bfn(cfg).rate);
        }

        const auto dir = prepare_out_dir(out_dir);
        const std::string csv_name = "figure1_" + variant + ".csv";
        write_figure1_csv(g.nodes(), horizons, rates, (dir / csv_name).string());
        write_figure1_plt(csv_name, static_cast<int>(horizons.size()), note,
                          (dir / ("figure1_" + variant + ".plt")).string());
        out << "figure1: wrote " << csv_name << " and the matching plt script to "
            << dir.string() << '\n';
        return 0;
    } catch (const std::exception& e) {
        return report_failure(e, err);
    }
}

int cmd_verify(const std::string& out_dir, const std::vector<int>& only,
               std::ostream& out, std::ostream& err) {
    try {
        std::vector<int> ids = only.empty() ? criterion_ids() : only;
        nlohmann::ordered_json doc;
        doc["criteria"] = nlohmann::ordered_json::array();
        int failed = 0;
        const CriterionResult* first_failure = nullptr;
        std::vector<CriterionResult> results;
        results.reserve(ids.size());
        for (int id : ids) results.push_back(run_criterion(id));

        for (const CriterionResult& r : results) {
            nlohmann::ordered_json jr;
            jr["id"] = r.id;
            jr["name"] = r.name;
            jr["pass"] = r.pass;
            jr["measured"] = nlohmann::ordered_json::object();
            for (const auto& [k, v] : r.measured) jr["measured"][k] = v;
            jr["tolerances"] = nlohmann::ordered_json::object();
            for (const auto& [k, v] : r.tolerances) jr["tolerances"][k] = v;
            if (!r.note.empty()) jr["note"] = r.note;
            doc["criteria"].push_back(std::move(jr));
            out << "criterion " << r.id << ' ' << (r.pass ? "PASS" : "FAIL") << " ("
                << r.name << ")\n";
            if (!r.pass) {
                failed += 1;
                if (!first_failure) first_failure = &r;
            }
        }
        doc["executed"] = static_cast<int>(results.size());
        doc["failed"] = failed;

        const auto dir = prepare_out_dir(out_dir);
        std::ofstream vf((dir / "verify.json").string(), std::ios::binary);
        if (!vf) throw Error("cannot write verify.json");
        vf << doc.dump(2) << '\n';

        if (failed > 0) {
            err << "verify: criterion " << first_failure->id << " ("
                << first_failure->name << ") failed\n";
            return 1;
        }
        return 0;
    } catch (const std::exception& e) {
        return report_failure(e, err);
    }
}

int cmd_bn_growth(double K, double Kp, double nu, double T, int N,
                  const std::string& out_dir, std::ostream& out, std::ostream& err) {
    try {
        if (N < 1 || N > 256)
            throw PreconditionError("bn-growth: N must lie in [1, 256]");
        std::vector<std::complex<double>> a(static_cast<std::size_t>(N));
        for (int n = 1; n <= N; ++n)
            a[static_cast<std::size_t>(n - 1)] = 1.0 / (static_cast<double>(n) * n);
        const BnSequence seq = bn_sequence(a, K, Kp, nu, T);

        const auto dir = prepare_out_dir(out_dir);
        write_bn_csv(seq, (dir / "bn.csv").string());

        if (K == 0.0 && Kp == 0.0) {
            out << "bn-growth: all b_n vanish; well-posed boundary case\n";
            return 0;
        }
        // The asymptotic regime lives in the tail n >= N: below it the
        // quadratic amplification has not taken over and g_n reflects the
        // prefactors instead.
        double tail_max = -std::numeric_limits<double>::infinity();
        for (std::size_t i = static_cast<std::size_t>(N - 2 > 0 ? N - 2 : 0);
             i < seq.growth.size(); ++i)
            if (std::isfinite(seq.growth[i])) tail_max = std::max(tail_max, seq.growth[i]);
        const double threshold = 0.4 * nu * T;
        if (tail_max > threshold)
            out << "bn-growth: tail max g_n = " << format_double(tail_max)
                << " exceeds 0.4 nu T = " << format_double(threshold)
                << "; super-polynomial growth, backward sweep unsolvable in "
                   "general (Theorem 2, docs/theory.md)\n";
        else
            out << "bn-growth: tail max g_n = " << format_double(tail_max)
                << " stays at or below 0.4 nu T = " << format_double(threshold)
                << "; polynomial growth\n";
        return 0;
    } catch (const std::exception& e) {
        return report_failure(e, err);
    }
}

int cmd_colehopf_check(const std::string& ic_text, double nu, double T,
                       int n_modes, double cap, double tol, std::ostream& out,
                       std::ostream& err) {
    try {
        const AnalyticProfile profile = AnalyticProfile::parse(ic_text);
        const Grid1D g(512, BoundaryKind::Dirichlet);
        const Field ic = profile.sample(g);
        const double discrepancy = k0_wellposedness_check(ic, nu, T, n_modes, cap);
        out << "colehopf-check: worst backward/forward discrepancy "
            << format_double(discrepancy) << " over " << n_modes
            << " modes (tolerance " << format_double(tol) << ")\n";
        if (discrepancy <= tol) {
            out << "colehopf-check: backward problem well-posed with the gain "
                   "off (Proposition 3, docs/theory.md)\n";
            return 0;
        }
        err << "colehopf-check: discrepancy exceeds the tolerance; increase the "
               "mode cap or lower the horizon (Proposition 3, docs/theory.md)\n";
        return 1;
    } catch (const std::exception& e) {
        return report_failure(e, err);
    }
}

}  // namespace bfn
