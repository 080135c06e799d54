#pragma once

#include <complex>
#include <vector>

#include "bfn/field.hpp"
#include "bfn/grid.hpp"

namespace bfn {

/// Eigenbasis used by the exact integrators: sine modes for homogeneous
/// Dirichlet walls, cosine modes for Neumann walls, complex Fourier modes for
/// the torus.
enum class ModalBasis { Sine, Cosine, Fourier };

/// Coefficients of a field in one of the bases above.
///
///   Sine:    f(x) = sum_{k=1..m} c_k sin(k pi x),      coeffs[k-1] = c_k
///   Cosine:  f(x) = sum_{k=0..m} c_k cos(k pi x),      coeffs[k]   = c_k
///   Fourier: f(x) = (1/n) sum_{k=0..n-1} c_k e^{2 pi i k x}
///
/// Sine and Cosine coefficients are real (imaginary parts zero).
struct ModalRepr {
    ModalBasis basis = ModalBasis::Sine;
    Grid1D grid{4, BoundaryKind::Dirichlet};
    std::vector<std::complex<double>> coeffs;

    int n_modes() const { return static_cast<int>(coeffs.size()); }
};

/// Number of coefficients that make the transform an exact bijection on the
/// grid: n-2 sine modes (Dirichlet), n cosine modes (Neumann), n Fourier
/// modes (periodic).
int full_mode_count(const Grid1D& g, ModalBasis basis);

/// Project onto the first n_modes basis functions (n_modes < 0 keeps all).
ModalRepr analyze(const Field& f, ModalBasis basis, int n_modes = -1);

/// Evaluate the representation back on its grid's nodes.
Field synthesize(const ModalRepr& m, double time_tag = 0);

}  // namespace bfn
