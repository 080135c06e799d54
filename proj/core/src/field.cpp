#include "bfn/field.hpp"

#include <cmath>

namespace bfn {

namespace {

void validate(const Grid1D& g, const std::vector<double>& v) {
    if (static_cast<int>(v.size()) != g.n)
        throw PreconditionError("Field: value count does not match grid");
    for (double x : v)
        if (!std::isfinite(x)) throw PreconditionError("Field: non-finite value");
    if (g.bc == BoundaryKind::Dirichlet) {
        if (v.front() != 0.0 || v.back() != 0.0)
            throw PreconditionError("Field: Dirichlet endpoints must be exactly zero");
    }
}

}  // namespace

Field::Field(Grid1D g, std::vector<double> v, double t)
    : grid(g), values(std::move(v)), time_tag(t) {
    validate(grid, values);
}

Field Field::sample(const Grid1D& g, const std::function<double(double)>& fn,
                    double time_tag) {
    std::vector<double> v(static_cast<size_t>(g.n));
    for (int j = 0; j < g.n; ++j) v[static_cast<size_t>(j)] = fn(g.node(j));
    if (g.bc == BoundaryKind::Dirichlet) {
        v.front() = 0.0;
        v.back() = 0.0;
    }
    return Field(g, std::move(v), time_tag);
}

Field Field::zeros(const Grid1D& g, double time_tag) {
    return Field(g, std::vector<double>(static_cast<size_t>(g.n), 0.0), time_tag);
}

Field operator+(const Field& a, const Field& b) {
    if (a.grid != b.grid) throw PreconditionError("Field +: grid mismatch");
    std::vector<double> v(a.values);
    for (size_t j = 0; j < v.size(); ++j) v[j] += b.values[j];
    return Field(a.grid, std::move(v), a.time_tag);
}

Field operator-(const Field& a, const Field& b) {
    if (a.grid != b.grid) throw PreconditionError("Field -: grid mismatch");
    std::vector<double> v(a.values);
    for (size_t j = 0; j < v.size(); ++j) v[j] -= b.values[j];
    return Field(a.grid, std::move(v), a.time_tag);
}

Field operator*(double s, const Field& a) {
    std::vector<double> v(a.values);
    for (double& x : v) x *= s;
    return Field(a.grid, std::move(v), a.time_tag);
}

double max_abs(const Field& f) {
    double m = 0;
    for (double x : f.values) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace bfn
