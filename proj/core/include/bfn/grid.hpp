#pragma once

#include <cmath>
#include <vector>

#include "bfn/errors.hpp"

namespace bfn {

enum class BoundaryKind { Dirichlet, Neumann, Periodic };

/// Uniform 1-D grid on [0,1].
///
/// Dirichlet and Neumann grids carry both endpoints (x_j = j/(n-1));
/// periodic grids carry one point per cell (x_j = j/n) and identify x=1
/// with x=0.  Neumann grids hold heat-side fields produced by the
/// logarithmic transform, which satisfy a no-flux condition instead of a
/// zero value at the walls.
struct Grid1D {
    int n = 0;
    BoundaryKind bc = BoundaryKind::Periodic;

    Grid1D() = default;
    Grid1D(int n_, BoundaryKind bc_) : n(n_), bc(bc_) {
        if (n < 4) throw PreconditionError("Grid1D: need at least 4 nodes");
    }

    double dx() const {
        return bc == BoundaryKind::Periodic ? 1.0 / n : 1.0 / (n - 1);
    }

    double node(int j) const { return j * dx(); }

    std::vector<double> nodes() const {
        std::vector<double> x(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) x[static_cast<size_t>(j)] = node(j);
        return x;
    }

    bool operator==(const Grid1D& o) const { return n == o.n && bc == o.bc; }
    bool operator!=(const Grid1D& o) const { return !(*this == o); }
};

/// Wrap a coordinate into [0,1).
inline double wrap01(double x) {
    double y = x - std::floor(x);
    if (y >= 1.0) y -= 1.0;  // guards x = -1e-17 rounding to 1.0
    return y;
}

}  // namespace bfn
