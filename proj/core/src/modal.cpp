#include "bfn/modal.hpp"

#include <cmath>
#include <numbers>

#include "bfn/errors.hpp"

namespace bfn {

namespace {

constexpr double kPi = std::numbers::pi;

void require_basis_grid(const Grid1D& g, ModalBasis basis) {
    switch (basis) {
        case ModalBasis::Fourier:
            if (g.bc != BoundaryKind::Periodic)
                throw PreconditionError("Fourier basis requires a periodic grid");
            break;
        case ModalBasis::Sine:
            if (g.bc != BoundaryKind::Dirichlet)
                throw PreconditionError("sine basis requires a Dirichlet grid");
            break;
        case ModalBasis::Cosine:
            if (g.bc != BoundaryKind::Neumann)
                throw PreconditionError("cosine basis requires a Neumann grid");
            break;
    }
}

}  // namespace

int full_mode_count(const Grid1D& g, ModalBasis basis) {
    require_basis_grid(g, basis);
    switch (basis) {
        case ModalBasis::Sine:
            return g.n - 2;
        case ModalBasis::Cosine:
        case ModalBasis::Fourier:
            return g.n;
    }
    return 0;
}

ModalRepr analyze(const Field& f, ModalBasis basis, int n_modes) {
    const Grid1D& g = f.grid;
    const int full = full_mode_count(g, basis);
    if (n_modes < 0) n_modes = full;
    if (n_modes > full)
        throw PreconditionError("analyze: n_modes exceeds the grid's mode count");

    ModalRepr m;
    m.basis = basis;
    m.grid = g;
    m.coeffs.assign(n_modes, 0.0);

    if (basis == ModalBasis::Sine) {
        const int N = g.n - 1;
        for (int k = 1; k <= n_modes; ++k) {
            double acc = 0;
            for (int j = 1; j < N; ++j) acc += f[j] * std::sin(kPi * j * k / N);
            m.coeffs[k - 1] = 2.0 * acc / N;
        }
    } else if (basis == ModalBasis::Cosine) {
        const int N = g.n - 1;
        for (int k = 0; k < n_modes; ++k) {
            double acc = 0.5 * (f[0] + (k % 2 == 0 ? f[N] : -f[N]));
            for (int j = 1; j < N; ++j) acc += f[j] * std::cos(kPi * j * k / N);
            m.coeffs[k] = (k == 0 || k == N) ? acc / N : 2.0 * acc / N;
        }
    } else {
        const int n = g.n;
        for (int k = 0; k < n_modes; ++k) {
            std::complex<double> acc = 0;
            for (int j = 0; j < n; ++j) {
                const double ang = -2 * kPi * j * k / n;
                acc += f[j] * std::complex<double>(std::cos(ang), std::sin(ang));
            }
            m.coeffs[k] = acc;
        }
    }
    return m;
}

Field synthesize(const ModalRepr& m, double time_tag) {
    const Grid1D& g = m.grid;
    require_basis_grid(g, m.basis);
    std::vector<double> v(g.n, 0.0);

    if (m.basis == ModalBasis::Sine) {
        const int N = g.n - 1;
        for (int j = 1; j < N; ++j) {
            double acc = 0;
            for (int k = 1; k <= m.n_modes(); ++k)
                acc += m.coeffs[k - 1].real() * std::sin(kPi * j * k / N);
            v[j] = acc;
        }
    } else if (m.basis == ModalBasis::Cosine) {
        const int N = g.n - 1;
        for (int j = 0; j <= N; ++j) {
            double acc = 0;
            for (int k = 0; k < m.n_modes(); ++k)
                acc += m.coeffs[k].real() * std::cos(kPi * j * k / N);
            v[j] = acc;
        }
    } else {
        const int n = g.n;
        for (int j = 0; j < n; ++j) {
            std::complex<double> acc = 0;
            for (int k = 0; k < m.n_modes(); ++k) {
                const double ang = 2 * kPi * j * k / n;
                acc += m.coeffs[k] * std::complex<double>(std::cos(ang), std::sin(ang));
            }
            v[j] = acc.real() / n;
        }
    }
    return Field(g, std::move(v), time_tag);
}

}  // namespace bfn
