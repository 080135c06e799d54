#include "bfn/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "bfn/errors.hpp"

namespace bfn {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& text) {
    double v = 0;
    const char* b = text.data();
    const char* e = b + text.size();
    const auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc{} || p != e)
        throw ConfigError("config: key '" + key + "' has a malformed number '" + text + "'");
    return v;
}

int parse_int(const std::string& key, const std::string& text) {
    int v = 0;
    const char* b = text.data();
    const char* e = b + text.size();
    const auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc{} || p != e)
        throw ConfigError("config: key '" + key + "' has a malformed integer '" + text + "'");
    return v;
}

std::pair<double, double> parse_pair(const std::string& key, const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ConfigError("config: key '" + key + "' expects 'full' or two comma-separated numbers");
    return {parse_double(key, trim(text.substr(0, comma))),
            parse_double(key, trim(text.substr(comma + 1)))};
}

}  // namespace

BfnConfig parse_run_config(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno += 1;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: line " + std::to_string(lineno) +
                              " is not of the form key = value");
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("config: line " + std::to_string(lineno) +
                              " has an empty key or value");
        if (!kv.emplace(key, value).second)
            throw ConfigError("config: duplicate key '" + key + "'");
    }

    static const std::vector<std::string> known = {
        "equation", "viscosity", "advection", "bc",           "T",
        "grid_n",   "nt",        "gain_amplitude", "kappa",   "gain_support",
        "gain_window", "u0",     "uobs0",     "iterations"};
    for (const auto& [key, value] : kv)
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ConfigError("config: unknown key '" + key + "'");

    auto take = [&](const std::string& key) -> const std::string* {
        const auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };
    auto require = [&](const std::string& key) -> const std::string& {
        const std::string* v = take(key);
        if (!v) throw ConfigError("config: missing required key '" + key + "'");
        return *v;
    };

    BfnConfig cfg;

    const std::string equation = require("equation");
    if (equation != "linear" && equation != "burgers")
        throw ConfigError("config: equation must be 'linear' or 'burgers'");

    cfg.spec.nu = parse_double("viscosity", require("viscosity"));
    cfg.spec.T = parse_double("T", require("T"));

    if (equation == "burgers") {
        if (const std::string* a = take("advection"); a && *a != "self")
            throw ConfigError("config: a burgers equation advects itself; drop the advection key");
        cfg.spec.advection = SelfAdvection{};
    } else {
        const std::string* a = take("advection");
        const std::string text = a ? *a : "constant 1";
        std::istringstream toks(text);
        std::string head;
        toks >> head;
        if (head == "constant") {
            std::string rest;
            toks >> rest;
            std::string extra;
            if (rest.empty() || (toks >> extra))
                throw ConfigError("config: advection 'constant' expects exactly one number");
            cfg.spec.advection = ConstantAdvection{parse_double("advection", rest)};
        } else {
            cfg.spec.advection = ProfileAdvection{};  // filled after grid_n is known
        }
    }

    cfg.grid_n = kv.count("grid_n") ? parse_int("grid_n", kv.at("grid_n")) : 512;
    cfg.nt = kv.count("nt") ? parse_int("nt", kv.at("nt")) : 2048;
    cfg.iterations = kv.count("iterations") ? parse_int("iterations", kv.at("iterations")) : 1;

    if (std::holds_alternative<ProfileAdvection>(cfg.spec.advection)) {
        const AnalyticProfile prof = AnalyticProfile::parse(kv.at("advection"));
        if (cfg.grid_n < 4) throw ConfigError("config: grid_n must be >= 4");
        const Grid1D g(cfg.grid_n, BoundaryKind::Periodic);
        std::vector<double> samples(static_cast<std::size_t>(cfg.grid_n));
        for (int j = 0; j < cfg.grid_n; ++j) samples[static_cast<std::size_t>(j)] = prof.value(g.node(j));
        cfg.spec.advection = ProfileAdvection{std::move(samples)};
    }

    if (const std::string* bc = take("bc")) {
        if (*bc == "dirichlet")
            cfg.spec.bc = BoundaryKind::Dirichlet;
        else if (*bc == "periodic")
            cfg.spec.bc = BoundaryKind::Periodic;
        else
            throw ConfigError("config: bc must be 'dirichlet' or 'periodic'");
    } else {
        cfg.spec.bc = cfg.spec.nu > 0 ? BoundaryKind::Dirichlet : BoundaryKind::Periodic;
    }

    cfg.gain.amplitude = parse_double("gain_amplitude", require("gain_amplitude"));
    cfg.gain.kappa = kv.count("kappa") ? parse_double("kappa", kv.at("kappa")) : 1.0;
    if (const std::string* s = take("gain_support"); s && *s != "full")
        cfg.gain.support = parse_pair("gain_support", *s);
    if (const std::string* w = take("gain_window"); w && *w != "full")
        cfg.gain.window = parse_pair("gain_window", *w);

    cfg.u0 = AnalyticProfile::parse(require("u0"));
    cfg.uobs0 = take("uobs0") ? AnalyticProfile::parse(kv.at("uobs0")) : AnalyticProfile{};

    return cfg;
}

BfnConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot read '" + path + "'");
    return parse_run_config(in);
}

}  // namespace bfn
