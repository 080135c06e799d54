#include "bfn/interpolate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bfn/errors.hpp"

namespace bfn {

namespace {

int wrap_index(int j, int n) {
    int r = j % n;
    return r < 0 ? r + n : r;
}

int clamp_index(int j, int n) { return std::clamp(j, 0, n - 1); }

double value_at(const Grid1D& g, const std::vector<double>& v, int j) {
    if (g.bc == BoundaryKind::Periodic) return v[wrap_index(j, g.n)];
    return v[clamp_index(j, g.n)];
}

}  // namespace

double interp_linear(const Grid1D& g, const std::vector<double>& v, double x) {
    if (static_cast<int>(v.size()) != g.n)
        throw PreconditionError("interp_linear: size mismatch");
    const double h = g.dx();
    if (g.bc == BoundaryKind::Periodic) {
        x = wrap01(x);
    } else {
        x = std::clamp(x, 0.0, 1.0);
    }
    double s = x / h;
    int j = static_cast<int>(std::floor(s));
    double t = s - j;
    if (g.bc != BoundaryKind::Periodic && j >= g.n - 1) {
        j = g.n - 2;
        t = 1.0;
    }
    return (1 - t) * value_at(g, v, j) + t * value_at(g, v, j + 1);
}

double interp_cubic(const Grid1D& g, const std::vector<double>& v, double x) {
    if (static_cast<int>(v.size()) != g.n)
        throw PreconditionError("interp_cubic: size mismatch");
    const double h = g.dx();
    if (g.bc == BoundaryKind::Periodic) {
        x = wrap01(x);
    } else {
        x = std::clamp(x, 0.0, 1.0);
    }
    double s = x / h;
    int j = static_cast<int>(std::floor(s));
    double t = s - j;
    if (g.bc != BoundaryKind::Periodic) {
        if (j < 1) {
            t += j - 1;
            j = 1;
        } else if (j > g.n - 3) {
            t += j - (g.n - 3);
            j = g.n - 3;
        }
    }
    const double f0 = value_at(g, v, j - 1);
    const double f1 = value_at(g, v, j);
    const double f2 = value_at(g, v, j + 1);
    const double f3 = value_at(g, v, j + 2);
    // Lagrange basis on nodes -1, 0, 1, 2 evaluated at t.
    const double a = t + 1, b = t, c = t - 1, d = t - 2;
    return f0 * (-b * c * d / 6.0) + f1 * (a * c * d / 2.0) +
           f2 * (-a * b * d / 2.0) + f3 * (a * b * c / 6.0);
}

std::vector<double> gradient(const Grid1D& g, const std::vector<double>& v) {
    if (static_cast<int>(v.size()) != g.n)
        throw PreconditionError("gradient: size mismatch");
    const int n = g.n;
    const double h = g.dx();
    std::vector<double> d(n);
    auto at = [&](int j) { return value_at(g, v, j); };
    if (g.bc == BoundaryKind::Periodic) {
        for (int j = 0; j < n; ++j)
            d[j] = (at(j - 2) - 8 * at(j - 1) + 8 * at(j + 1) - at(j + 2)) / (12 * h);
        return d;
    }
    for (int j = 2; j < n - 2; ++j)
        d[j] = (v[j - 2] - 8 * v[j - 1] + 8 * v[j + 1] - v[j + 2]) / (12 * h);
    d[0] = (-25 * v[0] + 48 * v[1] - 36 * v[2] + 16 * v[3] - 3 * v[4]) / (12 * h);
    d[1] = (-3 * v[0] - 10 * v[1] + 18 * v[2] - 6 * v[3] + v[4]) / (12 * h);
    d[n - 2] =
        (3 * v[n - 1] + 10 * v[n - 2] - 18 * v[n - 3] + 6 * v[n - 4] - v[n - 5]) / (12 * h);
    d[n - 1] =
        (25 * v[n - 1] - 48 * v[n - 2] + 36 * v[n - 3] - 16 * v[n - 4] + 3 * v[n - 5]) /
        (12 * h);
    return d;
}

Pchip::Pchip(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n)
        throw PreconditionError("Pchip: need at least two matching samples");
    for (std::size_t i = 1; i < n; ++i)
        if (!(x_[i] > x_[i - 1]))
            throw PreconditionError("Pchip: abscissae must be strictly increasing");

    std::vector<double> h(n - 1), delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x_[i + 1] - x_[i];
        delta[i] = (y_[i + 1] - y_[i]) / h[i];
    }
    d_.assign(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0) {
            d_[i] = 0;
        } else {
            const double w1 = 2 * h[i] + h[i - 1];
            const double w2 = h[i] + 2 * h[i - 1];
            d_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    auto end_slope = [](double h0, double h1, double d0, double d1) {
        double s = ((2 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (s * d0 <= 0)
            s = 0;
        else if (d0 * d1 <= 0 && std::abs(s) > 3 * std::abs(d0))
            s = 3 * d0;
        return s;
    };
    d_[0] = (n == 2) ? delta[0] : end_slope(h[0], h[1], delta[0], delta[1]);
    d_[n - 1] =
        (n == 2) ? delta[0] : end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
}

double Pchip::operator()(double xq) const {
    if (xq < x_.front() || xq > x_.back())
        throw PreconditionError("Pchip: query outside sample range");
    auto it = std::upper_bound(x_.begin(), x_.end(), xq);
    std::size_t i = (it == x_.begin()) ? 0 : (it - x_.begin() - 1);
    if (i >= x_.size() - 1) i = x_.size() - 2;
    const double h = x_[i + 1] - x_[i];
    const double t = (xq - x_[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1;
    const double h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2;
    const double h11 = t3 - t2;
    return h00 * y_[i] + h10 * h * d_[i] + h01 * y_[i + 1] + h11 * h * d_[i + 1];
}

Field resample_periodic(const std::vector<double>& positions,
                        const std::vector<double>& values, const Grid1D& g,
                        double time_tag) {
    if (g.bc != BoundaryKind::Periodic)
        throw PreconditionError("resample_periodic: periodic grid required");
    const std::size_t m = positions.size();
    if (m < 4 || values.size() != m)
        throw PreconditionError("resample_periodic: need at least four samples");

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> wx(m);
    for (std::size_t i = 0; i < m; ++i) wx[i] = wrap01(positions[i]);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return wx[a] < wx[b]; });

    const std::size_t pad = 3;
    std::vector<double> xs, ys;
    xs.reserve(m + 2 * pad);
    ys.reserve(m + 2 * pad);
    for (std::size_t i = 0; i < pad; ++i) {
        const std::size_t k = order[m - pad + i];
        xs.push_back(wx[k] - 1.0);
        ys.push_back(values[k]);
    }
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t k = order[i];
        xs.push_back(wx[k]);
        ys.push_back(values[k]);
    }
    for (std::size_t i = 0; i < pad; ++i) {
        const std::size_t k = order[i];
        xs.push_back(wx[k] + 1.0);
        ys.push_back(values[k]);
    }
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (xs[i] - xs[i - 1] < 1e-14)
            throw PreconditionError("resample_periodic: coincident sample positions");

    Pchip p(std::move(xs), std::move(ys));
    std::vector<double> vals(g.n);
    for (int j = 0; j < g.n; ++j) vals[j] = p(g.node(j));
    return Field(g, std::move(vals), time_tag);
}

}  // namespace bfn
