#pragma once

#include "bfn/field.hpp"

namespace bfn {

/// Discrete L2 norm: sqrt(dx * sum_j f_j^2).
double l2_norm(const Field& f);

/// Max-norm estimate of the spatial derivative: centered differences in the
/// interior (wrapping around for periodic grids), one-sided at Dirichlet walls.
double linf_grad(const Field& f);

}  // namespace bfn
