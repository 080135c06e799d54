#pragma once

#include <vector>

#include "bfn/equation.hpp"
#include "bfn/field.hpp"

namespace bfn {

/// Time-ordered snapshots of a single solve. All snapshots share one grid and
/// times increase strictly from the start to the end of the integration
/// interval.
struct Trajectory {
    EquationSpec spec;
    std::vector<double> times;
    std::vector<Field> snapshots;

    void validate() const;

    double t_begin() const { return times.front(); }
    double t_end() const { return times.back(); }

    /// Snapshot stored at time t (within 1e-9); error if absent.
    const Field& at_time(double t) const;

    const Field& initial() const { return snapshots.front(); }
    const Field& final() const { return snapshots.back(); }
};

}  // namespace bfn
