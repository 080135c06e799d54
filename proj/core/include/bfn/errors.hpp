#pragma once

#include <stdexcept>
#include <string>

namespace bfn {

/// Base class for all failures raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A precondition of an operation was violated by the caller.
struct PreconditionError : Error {
    using Error::Error;
};

/// Bad or inconsistent run configuration.
struct ConfigError : Error {
    using Error::Error;
};

/// Backward modal reconstruction refused more than half of the energy.
struct TruncationError : Error {
    TruncationError(const std::string& msg, int refused, int total)
        : Error(msg), refused_modes(refused), total_modes(total) {}
    int refused_modes = 0;
    int total_modes = 0;
};

/// Characteristic curves lost their ordering (shock formed or passed through).
struct CrossingError : Error {
    CrossingError(const std::string& msg, double when) : Error(msg), time(when) {}
    double time = 0;
};

/// Explicit advection step violated its CFL bound.
struct StabilityError : Error {
    using Error::Error;
};

/// Heat-side field must stay strictly positive for the logarithmic transform.
struct PositivityError : Error {
    using Error::Error;
};

/// The requested equation/gain pairing has no solution theory behind it.
/// The message names the theorem that rules the regime out and, where one
/// exists, the diagnostic that demonstrates the failure.
struct UnsupportedRegime : Error {
    using Error::Error;
};

/// No closed-form oracle exists for the requested comparison.
struct NoOracleError : Error {
    using Error::Error;
};

}  // namespace bfn
