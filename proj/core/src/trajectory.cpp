#include "bfn/trajectory.hpp"

#include <cmath>
#include <string>

#include "bfn/errors.hpp"

namespace bfn {

void Trajectory::validate() const {
    if (times.empty() || times.size() != snapshots.size())
        throw PreconditionError("trajectory: times and snapshots must match and be nonempty");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw PreconditionError("trajectory: times must increase strictly");
    for (const Field& f : snapshots)
        if (f.grid != snapshots.front().grid)
            throw PreconditionError("trajectory: snapshots must share one grid");
}

const Field& Trajectory::at_time(double t) const {
    for (std::size_t i = 0; i < times.size(); ++i)
        if (std::abs(times[i] - t) <= 1e-9) return snapshots[i];
    throw PreconditionError("trajectory: no snapshot stored at t=" + std::to_string(t));
}

}  // namespace bfn
