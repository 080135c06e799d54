#pragma once

#include <variant>
#include <vector>

#include "bfn/grid.hpp"

namespace bfn {

/// Advection term of the transport equation.
struct ConstantAdvection {
    double speed = 0;
};
/// Velocity profile a(x) sampled on the solver grid nodes.
struct ProfileAdvection {
    std::vector<double> samples;
};
/// Burgers: the solution advects itself.
struct SelfAdvection {};

using Advection = std::variant<ConstantAdvection, ProfileAdvection, SelfAdvection>;

/// One-dimensional transport problem
///   du/dt - nu d2u/dx2 + a(x) du/dx = (nudging terms)
/// on [0,1] over the horizon [0,T].
struct EquationSpec {
    double nu = 0;
    Advection advection = ConstantAdvection{1.0};
    BoundaryKind bc = BoundaryKind::Periodic;
    double T = 1;

    void check() const {
        if (nu < 0) throw PreconditionError("EquationSpec: nu must be >= 0");
        if (T <= 0) throw PreconditionError("EquationSpec: T must be > 0");
        if (nu > 0 && bc != BoundaryKind::Dirichlet)
            throw PreconditionError("EquationSpec: viscous problems require Dirichlet walls");
        if (nu == 0 && bc != BoundaryKind::Periodic)
            throw PreconditionError("EquationSpec: inviscid problems require a periodic domain");
    }

    bool is_burgers() const { return std::holds_alternative<SelfAdvection>(advection); }
};

}  // namespace bfn
