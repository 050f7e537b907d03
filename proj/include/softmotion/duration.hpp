#pragma once

#include <optional>
#include <span>
#include <vector>

#include "softmotion/profile.hpp"

namespace softmotion {

// One axis of a waypoint transition: both ends at zero acceleration.
struct TransitionProblem {
    KinematicState init;   // (0, V0, x0)
    KinematicState final;  // (0, Vf, x0 + D)
    double t_opt = 0.0;
    double t_stop = 0.0;
    double t_imp = 0.0;

    [[nodiscard]] double displacement() const { return final.x - init.x; }
};

// Fills t_opt and t_stop, and sets t_imp = t_opt. Throws std::invalid_argument when a boundary
// acceleration is nonzero or a velocity exceeds vmax.
TransitionProblem make_transition(const KinematicState& init, const KinematicState& final,
                                  const KinematicLimits& limits);

struct StopPlan {
    double time = 0.0;  // without dwell
    AxisProfile profile;
};

// Brake to rest, move the remaining distance rest-to-rest, accelerate to Vf. When t_imp exceeds
// the stop time, a dwell of the difference is inserted at rest after braking.
StopPlan stop_time(const TransitionProblem& problem, const KinematicLimits& limits,
                   std::optional<double> t_imp = std::nullopt, double t0 = 0.0);

// Change of velocity, cruise at Vc, change of velocity, lasting t_imp (within 1e-6 s) and
// covering the displacement exactly. std::nullopt when no cruise velocity yields t_imp.
// t_imp equal to t_opt returns the minimal-time profile.
std::optional<AxisProfile> plan_slowing_velocity(const TransitionProblem& problem, double t_imp,
                                                 const KinematicLimits& limits, double t0 = 0.0);

struct TimeInterval {
    double lo = 0.0;
    double hi = 0.0;  // +infinity for the last interval

    [[nodiscard]] bool contains(double t) const { return t >= lo && t <= hi; }
};

// Durations in [t_opt, inf) reachable by plan_slowing_velocity or by stopping, scanned at
// `resolution` and with edges refined to 1e-6 s. Edges lie on the feasible side.
std::vector<TimeInterval> feasibility_intervals(const TransitionProblem& problem,
                                                const KinematicLimits& limits,
                                                double resolution = 1e-3);

// Profile of exactly `t_imp` for one axis: minimal time, slowed, or stopped with dwell.
// std::nullopt when t_imp is in a gap.
std::optional<AxisProfile> plan_with_duration(const TransitionProblem& problem, double t_imp,
                                              const KinematicLimits& limits, double t0 = 0.0);

struct CommonTime {
    double t_imp = 0.0;
    std::vector<AxisProfile> profiles;
};

// Least duration, not below any axis' t_opt, achievable by every axis; never above the largest
// t_stop. `limits` holds one entry per problem or a single entry shared by all.
CommonTime impose_common_time(std::span<const TransitionProblem> problems,
                              std::span<const KinematicLimits> limits, double t0 = 0.0);

}  // namespace softmotion
