#pragma once

#include <cstddef>

#include "softmotion/profile.hpp"

namespace softmotion {

struct OracleOptions {
    std::size_t node_cap = 500'000'000;  // hull vertices expanded
    double horizon = 60.0;                 // seconds of motion searched
};

struct OracleResult {
    enum class Status { Found, Infeasible, BudgetExceeded };

    Status status = Status::Infeasible;
    double time = 0.0;           // k * dt, valid when status == Found
    std::size_t expanded = 0;    // hull vertices expanded
};

// Breadth-first search over piecewise-constant jerk in {-jmax, 0, +jmax}, held for `dt` per
// step, from `init` to `final` (positions absolute).
//
// States reached at a depth are grouped by acceleration value and each group is kept as the
// convex hull of its (v, x) points, which loses no reachable state when jerk may take any value
// in [-jmax, jmax]. Jerk driving |a| past amax acts only until the bound. The search stops at the
// first depth k from which three more steps of jerk in [-jmax, jmax] land exactly on `final`,
// and reports (k + 3) dt; the time is therefore attainable, never below the true minimum.
// Meant for desk-scale instances (a few seconds of motion at millisecond steps).
OracleResult brute_force_min_time(const KinematicState& init, const KinematicState& final,
                                  const KinematicLimits& limits, double dt,
                                  const OracleOptions& options = {});

}  // namespace softmotion
