#pragma once

#include <string>

#include "bfn/field.hpp"

namespace bfn {

/// Named analytic initial profile with closed-form derivative, so that exact
/// observation sources and shock-time estimates do not depend on grid
/// differencing.
///
///   zero:   offset
///   sinpi:  amplitude * sin(pi x) + offset
///   sin2pi: amplitude * sin(2 pi x + phase) + offset
struct AnalyticProfile {
    enum class Shape { Zero, SinPi, Sin2Pi };

    Shape shape = Shape::Zero;
    double amplitude = 0;
    double phase = 0;
    double offset = 0;

    double value(double x) const;
    double slope(double x) const;

    double min_slope() const;
    double max_abs_value() const;

    Field sample(const Grid1D& g, double time_tag = 0) const;

    bool is_zero() const { return (shape == Shape::Zero || amplitude == 0.0) && offset == 0.0; }

    /// Parse "zero", "sinpi <amp> [offset]" or "sin2pi <amp> [phase [offset]]".
    static AnalyticProfile parse(const std::string& text);
};

}  // namespace bfn
