#pragma once

#include <cstddef>
#include <vector>

namespace bfn::detail {

/// Thomas algorithm with the elimination factors precomputed; the matrix is
/// factorized once and reused every step.
struct Tridiag {
    std::vector<double> sub, diag, sup;

    void factorize() {
        const std::size_t m = diag.size();
        cp_.assign(m, 0.0);
        piv_.assign(m, 0.0);
        double d = diag[0];
        piv_[0] = d;
        cp_[0] = sup[0] / d;
        for (std::size_t i = 1; i < m; ++i) {
            d = diag[i] - sub[i] * cp_[i - 1];
            piv_[i] = d;
            if (i + 1 < m) cp_[i] = sup[i] / d;
        }
    }

    void solve(std::vector<double>& rhs) const {
        const std::size_t m = rhs.size();
        rhs[0] /= piv_[0];
        for (std::size_t i = 1; i < m; ++i)
            rhs[i] = (rhs[i] - sub[i] * rhs[i - 1]) / piv_[i];
        for (std::size_t i = m - 1; i-- > 0;) rhs[i] -= cp_[i] * rhs[i + 1];
    }

  private:
    std::vector<double> cp_;   // modified superdiagonal
    std::vector<double> piv_;  // pivots
};

}  // namespace bfn::detail
