#include "bfn/norms.hpp"

#include <cmath>

namespace bfn {

double l2_norm(const Field& f) {
    double s = 0;
    for (double x : f.values) s += x * x;
    return std::sqrt(f.grid.dx() * s);
}

double linf_grad(const Field& f) {
    const auto& v = f.values;
    const int n = f.grid.n;
    const double h = f.grid.dx();
    double m = 0;
    if (f.grid.bc == BoundaryKind::Periodic) {
        for (int j = 0; j < n; ++j) {
            const double d = (v[static_cast<size_t>((j + 1) % n)] -
                              v[static_cast<size_t>((j + n - 1) % n)]) /
                             (2 * h);
            m = std::max(m, std::abs(d));
        }
    } else {
        m = std::abs((v[1] - v[0]) / h);
        m = std::max(m, std::abs((v[static_cast<size_t>(n - 1)] - v[static_cast<size_t>(n - 2)]) / h));
        for (int j = 1; j + 1 < n; ++j) {
            const double d =
                (v[static_cast<size_t>(j + 1)] - v[static_cast<size_t>(j - 1)]) / (2 * h);
            m = std::max(m, std::abs(d));
        }
    }
    return m;
}

}  // namespace bfn
