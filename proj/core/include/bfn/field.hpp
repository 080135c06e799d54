#pragma once

#include <functional>
#include <vector>

#include "bfn/grid.hpp"

namespace bfn {

/// Grid function tagged with the time it belongs to.
///
/// Values are validated once at construction: all entries finite, and for
/// Dirichlet grids the endpoint entries exactly zero.  Treat instances as
/// immutable after that.
struct Field {
    Grid1D grid;
    std::vector<double> values;
    double time_tag = 0;

    Field() = default;
    Field(Grid1D g, std::vector<double> v, double t);

    /// Sample fn on the grid nodes.  Dirichlet endpoints are snapped to zero
    /// so that analytically-vanishing profiles (sin(pi x), ...) survive the
    /// exact-zero endpoint invariant despite rounding.
    static Field sample(const Grid1D& g, const std::function<double(double)>& fn,
                        double time_tag = 0);

    static Field zeros(const Grid1D& g, double time_tag = 0);

    double operator[](size_t j) const { return values[j]; }
    int n() const { return grid.n; }
};

Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);
Field operator*(double s, const Field& a);

/// Largest absolute nodal value.
double max_abs(const Field& f);

}  // namespace bfn
