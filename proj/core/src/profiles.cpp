#include "bfn/profiles.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "bfn/errors.hpp"

namespace bfn {

namespace {
constexpr double kPi = std::numbers::pi;
}

double AnalyticProfile::value(double x) const {
    switch (shape) {
        case Shape::Zero:
            return offset;
        case Shape::SinPi:
            return amplitude * std::sin(kPi * x) + offset;
        case Shape::Sin2Pi:
            return amplitude * std::sin(2 * kPi * x + phase) + offset;
    }
    return offset;
}

double AnalyticProfile::slope(double x) const {
    switch (shape) {
        case Shape::Zero:
            return 0;
        case Shape::SinPi:
            return amplitude * kPi * std::cos(kPi * x);
        case Shape::Sin2Pi:
            return amplitude * 2 * kPi * std::cos(2 * kPi * x + phase);
    }
    return 0;
}

double AnalyticProfile::min_slope() const {
    switch (shape) {
        case Shape::Zero:
            return 0;
        case Shape::SinPi:
            return -std::abs(amplitude) * kPi;
        case Shape::Sin2Pi:
            return -std::abs(amplitude) * 2 * kPi;
    }
    return 0;
}

double AnalyticProfile::max_abs_value() const {
    if (shape == Shape::Zero) return std::abs(offset);
    return std::abs(amplitude) + std::abs(offset);
}

Field AnalyticProfile::sample(const Grid1D& g, double time_tag) const {
    return Field::sample(
        g, [this](double x) { return value(x); }, time_tag);
}

AnalyticProfile AnalyticProfile::parse(const std::string& text) {
    std::istringstream in(text);
    std::string name;
    if (!(in >> name)) throw ConfigError("empty profile specification");

    AnalyticProfile p;
    if (name == "zero") {
        p.shape = Shape::Zero;
        std::string rest;
        if (in >> rest) throw ConfigError("trailing tokens in profile: " + rest);
        return p;
    }
    if (name == "sinpi") {
        p.shape = Shape::SinPi;
    } else if (name == "sin2pi") {
        p.shape = Shape::Sin2Pi;
    } else {
        throw ConfigError("unknown profile name: " + name);
    }

    if (!(in >> p.amplitude))
        throw ConfigError("profile '" + name + "' needs an amplitude");
    if (p.shape == Shape::Sin2Pi) {
        in >> p.phase;  // optional
    }
    if (!in.eof()) in >> p.offset;  // optional
    in.clear();
    std::string rest;
    if (in >> rest) throw ConfigError("trailing tokens in profile: " + rest);
    if (!std::isfinite(p.amplitude) || !std::isfinite(p.phase) || !std::isfinite(p.offset))
        throw ConfigError("profile parameters must be finite");
    return p;
}

}  // namespace bfn
