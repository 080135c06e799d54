#pragma once

#include <vector>

#include "bfn/field.hpp"
#include "bfn/grid.hpp"

namespace bfn {

/// Piecewise-linear interpolation of uniform grid data. Periodic grids wrap,
/// Dirichlet grids clamp the query to [0, 1].
double interp_linear(const Grid1D& g, const std::vector<double>& v, double x);

/// 4-point Lagrange interpolation (cubic), same boundary conventions.
double interp_cubic(const Grid1D& g, const std::vector<double>& v, double x);

/// Node derivatives by 4th-order centred differences (one-sided stencils of
/// the same order at Dirichlet walls).
std::vector<double> gradient(const Grid1D& g, const std::vector<double>& v);

/// Monotone cubic interpolant with Fritsch-Carlson slope limiting.
/// Abscissae must be strictly increasing; queries must stay inside the range.
class Pchip {
  public:
    Pchip(std::vector<double> x, std::vector<double> y);
    double operator()(double xq) const;

  private:
    std::vector<double> x_, y_, d_;
};

/// Resample scattered samples of a periodic function onto a uniform grid.
/// Positions need not be sorted or wrapped, but must be pairwise distinct
/// modulo 1. Interpolation is monotone cubic over a tiled copy of the data.
Field resample_periodic(const std::vector<double>& positions,
                        const std::vector<double>& values, const Grid1D& g,
                        double time_tag);

}  // namespace bfn
