#pragma once

#include <algorithm>
#include <optional>
#include <utility>

#include "bfn/errors.hpp"

namespace bfn {

/// Nudging gain K with spatial support and temporal window.
///
/// The forward sweep subtracts K(t,x)(u - u_obs); the backward sweep adds
/// K'(t,x)(u - u_obs) with K' = kappa * K on the same support and window.
struct Gain {
    double amplitude = 0;  ///< K >= 0
    double kappa = 1;      ///< K' = kappa * K, kappa > 0
    std::optional<std::pair<double, double>> support;  ///< nullopt = whole domain
    std::optional<std::pair<double, double>> window;   ///< nullopt = always on

    static Gain constant(double K, double kappa = 1) {
        Gain g;
        g.amplitude = K;
        g.kappa = kappa;
        g.check();
        return g;
    }

    static Gain spatial(double K, double a, double b, double kappa = 1) {
        Gain g;
        g.amplitude = K;
        g.kappa = kappa;
        g.support = {a, b};
        g.check();
        return g;
    }

    static Gain temporal(double K, double t1, double t2, double kappa = 1) {
        Gain g;
        g.amplitude = K;
        g.kappa = kappa;
        g.window = {t1, t2};
        g.check();
        return g;
    }

    void check() const {
        if (amplitude < 0) throw PreconditionError("Gain: amplitude must be >= 0");
        if (kappa <= 0) throw PreconditionError("Gain: kappa must be > 0");
        if (support) {
            auto [a, b] = *support;
            if (!(0 <= a && a < b && b <= 1))
                throw PreconditionError("Gain: support must satisfy 0 <= a < b <= 1");
        }
        if (window) {
            auto [t1, t2] = *window;
            if (!(0 <= t1 && t1 < t2))
                throw PreconditionError("Gain: window must satisfy 0 <= t1 < t2");
        }
    }

    bool in_support(double x) const {
        return !support || (support->first <= x && x <= support->second);
    }

    bool in_window(double t) const {
        return !window || (window->first <= t && t <= window->second);
    }

    /// K(t,x) of the forward (damping) sweep.
    double evaluate(double t, double x) const {
        return (in_support(x) && in_window(t)) ? amplitude : 0.0;
    }

    /// K'(t,x) = kappa * K(t,x) of the backward sweep.
    double evaluate_backward(double t, double x) const {
        return kappa * evaluate(t, x);
    }

    /// Length of [lo,hi] intersected with the active window.
    double window_overlap(double lo, double hi) const {
        if (hi <= lo) return 0.0;
        if (!window) return hi - lo;
        return std::max(0.0, std::min(hi, window->second) - std::max(lo, window->first));
    }

    bool full_support() const { return !support.has_value(); }
};

}  // namespace bfn
