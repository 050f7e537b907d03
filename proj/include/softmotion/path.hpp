#pragma once

#include <span>
#include <vector>

#include "softmotion/duration.hpp"
#include "softmotion/profile.hpp"

namespace softmotion {

// Synchronized straight-line motion between two waypoints, with the shared cruise window.
// When the leg never reaches its cruise velocity both markers sit at the velocity peak.
struct Leg {
    std::vector<AxisProfile> axes;
    double cruise_start = 0.0;  // absolute time
    double cruise_end = 0.0;
    double end = 0.0;
};

Leg plan_leg(std::span<const double> p0, std::span<const double> pf,
             std::span<const KinematicLimits> limits, double t0 = 0.0);

// Per-axis problems from the end of the incoming cruise to the start of the outgoing one.
std::vector<TransitionProblem> transition_conditions(const Leg& in, const Leg& out,
                                                     std::span<const KinematicLimits> limits);

struct TransitionReport {
    std::vector<TransitionProblem> axes;  // t_imp set to the common duration
    double t_imp = 0.0;
    double start_time = 0.0;  // on the assembled trajectory
};

struct PathPlan {
    std::vector<AxisProfile> axes;
    std::vector<TransitionReport> transitions;  // one per intermediate waypoint
};

// Polyline through `points` (at least three, all of one dimension), starting and ending at rest.
// Each corner is replaced by a transition lasting the least duration every axis can achieve.
// `limits` holds one entry per axis or a single shared entry.
PathPlan plan_waypoint_path(std::span<const std::vector<double>> points,
                            std::span<const KinematicLimits> limits);

}  // namespace softmotion
