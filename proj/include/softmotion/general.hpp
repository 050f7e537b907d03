#pragma once

#include "softmotion/profile.hpp"

namespace softmotion {

// Type1 motions start with a +jmax segment, Type2 with -jmax; Critical motions connect the
// boundary states directly.
enum class MotionType { Type1, Type2, Critical };

const char* to_string(MotionType type);

// Boundary data of a 1-D problem; only the difference of the two positions matters.
struct BoundaryProblem {
    KinematicState init;
    KinematicState final;

    [[nodiscard]] double displacement() const { return final.x - init.x; }
};

// True when the state lies within the limits and can still be brought to zero acceleration
// without crossing the velocity bound (or, for a final state, was reachable that way).
bool is_admissible_start(const KinematicState& state, const KinematicLimits& limits);
bool is_admissible_end(const KinematicState& state, const KinematicLimits& limits);

// Minimal-time connection of the (a, v) pairs of `init` and `final`, ignoring the final
// position. At most three segments: [+J, 0, -J] or [-J, 0, +J].
AxisProfile direct_connection(const KinematicState& init, const KinematicState& final,
                              const KinematicLimits& limits);

// Displacement swept by direct_connection. Throws std::invalid_argument for inadmissible states.
double critical_length(const KinematicState& init, const KinematicState& final,
                       const KinematicLimits& limits);

MotionType classify(const KinematicState& init, const KinematicState& final, double displacement,
                    const KinematicLimits& limits);

// Negates accelerations, velocities and positions. An involution; a Type2 problem maps to a
// Type1 problem whose solution, with jerk signs flipped, solves the original.
BoundaryProblem mirror_problem(const BoundaryProblem& problem);

// Minimal-time profile from `init` to `final` (positions absolute). Jerk values are in
// {-jmax, 0, +jmax} and the profile has at most seven segments.
// Throws std::invalid_argument when a boundary state is inadmissible.
AxisProfile plan_min_time_1d(const KinematicState& init, const KinematicState& final,
                             const KinematicLimits& limits, double t0 = 0.0);

// Negates the jerk of every segment of `profile` and the start state.
AxisProfile mirrored(const AxisProfile& profile);

}  // namespace softmotion
