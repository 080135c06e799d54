#include "bfn/report_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>

#include <json.hpp>

#include "bfn/errors.hpp"

namespace bfn {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    return out;
}

/// log10 of e^x without forming e^x.
double log10_from_ln(double ln_value) { return ln_value / std::numbers::ln10; }

std::string cell(double v) { return std::isfinite(v) ? format_double(v) : std::string(); }

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto [p, ec] =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    if (ec != std::errc{}) throw Error("number formatting failed");
    return std::string(buf, p);
}

void write_report_json(const BfnReport& report, const std::string& path) {
    nlohmann::ordered_json j;
    j["iterations"] = nlohmann::ordered_json::array();
    for (const IterationRecord& rec : report.iterations)
        j["iterations"].push_back({{"w0_norm", rec.w0_norm},
                                   {"wT_norm", rec.wT_norm},
                                   {"wtilde0_norm", rec.wtilde0_norm}});
    j["oracle_deviations"] = nlohmann::ordered_json::object();
    for (const auto& [name, value] : report.oracle_deviations)
        j["oracle_deviations"][name] = value;
    if (report.certificate) {
        j["observability"] = {{"m", report.certificate->m},
                              {"observable", report.certificate->observable},
                              {"K_threshold", report.certificate->K_threshold}};
    } else {
        j["observability"] = nullptr;
    }
    j["excluded_nodes"] = report.excluded_nodes;
    j["truncated_modes"] = report.truncated_modes;

    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

void write_profile_csv(const BfnReport& report, const std::string& path) {
    const Grid1D& g = report.w0.grid;
    auto out = open_out(path);
    out << "x,w0,wtilde0,rate\n";
    for (int i = 0; i < g.n; ++i) {
        const auto j = static_cast<std::size_t>(i);
        out << format_double(g.node(i)) << ',' << format_double(report.w0.values[j])
            << ',' << format_double(report.wtilde0.values[j]) << ','
            << cell(report.rate[j]) << '\n';
    }
}

void write_figure1_csv(const std::vector<double>& x,
                       const std::vector<double>& horizons,
                       const std::vector<std::vector<double>>& rates,
                       const std::string& path) {
    if (horizons.size() != rates.size())
        throw PreconditionError("figure1 csv: one rate column per horizon required");
    auto out = open_out(path);
    out << "x";
    for (double T : horizons) out << ",rate_T" << format_double(T);
    out << '\n';
    for (std::size_t i = 0; i < x.size(); ++i) {
        out << format_double(x[i]);
        for (const std::vector<double>& col : rates) {
            if (col.size() != x.size())
                throw PreconditionError("figure1 csv: rate column length mismatch");
            out << ',' << cell(col[i]);
        }
        out << '\n';
    }
}

void write_figure1_plt(const std::string& csv_name, int n_horizons,
                       const std::string& note, const std::string& path) {
    auto out = open_out(path);
    if (!note.empty()) out << "# " << note << '\n';
    out << "set datafile separator ','\n"
        << "set key autotitle columnhead\n"
        << "set xlabel 'x'\n"
        << "set ylabel 'decrease rate'\n"
        << "plot for [i=2:" << (n_horizons + 1) << "] '" << csv_name
        << "' using 1:i with lines\n";
}

void write_bn_csv(const BnSequence& seq, const std::string& path) {
    auto out = open_out(path);
    out << "n,log10_abs_bn,gn\n";
    for (std::size_t i = 0; i < seq.b.size(); ++i) {
        const double lb = seq.b[i].log_abs;
        out << (i + 2) << ','
            << (std::isfinite(lb) ? format_double(log10_from_ln(lb)) : std::string())
            << ',' << cell(seq.growth[i]) << '\n';
    }
}

}  // namespace bfn
