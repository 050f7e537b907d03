#include "softmotion/path.hpp"

#include <algorithm>
#include <stdexcept>

#include "softmotion/ptp.hpp"
#include "softmotion/sync.hpp"

namespace softmotion {

namespace {

// State of `profile` at t, extended past its end with zero jerk.
KinematicState state_at(const AxisProfile& profile, double t) {
    if (t >= profile.end_time()) {
        return integrate_segment(profile.end_state(), 0.0, t - profile.end_time());
    }
    return profile.evaluate(t).state;
}

// Part of a leg axis between two absolute times; an axis that does not move holds still.
AxisProfile leg_piece(const AxisProfile& profile, double from, double to) {
    if (profile.empty()) {
        return AxisProfile(profile.start_state(), from).then_hold(to - from);
    }
    return profile.slice(from, to);
}

const KinematicLimits& axis_limits(std::span<const KinematicLimits> limits, std::size_t i) {
    return limits.size() == 1 ? limits[0] : limits[i];
}

}  // namespace

Leg plan_leg(std::span<const double> p0, std::span<const double> pf,
             std::span<const KinematicLimits> limits, double t0) {
    Leg leg;
    leg.axes = plan_line(p0, pf, limits, t0);
    leg.cruise_start = leg.cruise_end = leg.end = t0;
    if (!std::equal(p0.begin(), p0.end(), pf.begin(), pf.end())) {
        const PtpTimes times = ptp_times(1.0, line_progress_limits(p0, pf, limits));
        leg.cruise_start = t0 + 2.0 * times.tj + times.ta;
        leg.cruise_end = leg.cruise_start + times.tv;
        leg.end = leg.cruise_end + 2.0 * times.tj + times.ta;
    }
    return leg;
}

std::vector<TransitionProblem> transition_conditions(const Leg& in, const Leg& out,
                                                     std::span<const KinematicLimits> limits) {
    if (in.axes.size() != out.axes.size()) {
        throw std::invalid_argument("transition_conditions: legs differ in dimension");
    }
    std::vector<TransitionProblem> problems;
    for (std::size_t i = 0; i < in.axes.size(); ++i) {
        KinematicState init = state_at(in.axes[i], in.cruise_end);
        KinematicState final = state_at(out.axes[i], out.cruise_start);
        // Both anchors are velocity extrema of a rest-to-rest line; drop rounding residue.
        init.a = 0.0;
        final.a = 0.0;
        problems.push_back(make_transition(init, final, axis_limits(limits, i)));
    }
    return problems;
}

PathPlan plan_waypoint_path(std::span<const std::vector<double>> points,
                            std::span<const KinematicLimits> limits) {
    if (points.size() < 3) {
        throw std::invalid_argument("at least three points are required");
    }
    const std::size_t dim = points.front().size();
    for (const auto& p : points) {
        if (p.size() != dim || dim == 0) {
            throw std::invalid_argument("waypoints must share a nonzero dimension");
        }
    }
    if (limits.size() != 1 && limits.size() != dim) {
        throw std::invalid_argument("one limits entry per axis expected");
    }

    std::vector<Leg> legs;
    for (std::size_t k = 0; k + 1 < points.size(); ++k) {
        legs.push_back(plan_leg(points[k], points[k + 1], limits));
    }

    PathPlan plan;
    const Leg& first = legs.front();
    for (std::size_t i = 0; i < dim; ++i) {
        plan.axes.push_back(leg_piece(first.axes[i], 0.0, first.cruise_end));
    }
    double clock = first.cruise_end;

    for (std::size_t k = 1; k < legs.size(); ++k) {
        const Leg& in = legs[k - 1];
        const Leg& out = legs[k];
        TransitionReport report;
        report.axes = transition_conditions(in, out, limits);
        const CommonTime common = impose_common_time(report.axes, limits);
        report.t_imp = common.t_imp;
        report.start_time = clock;
        for (auto& problem : report.axes) problem.t_imp = common.t_imp;

        const double leg_end = k + 1 == legs.size() ? out.end : out.cruise_end;
        for (std::size_t i = 0; i < dim; ++i) {
            plan.axes[i] = plan.axes[i]
                               .then(common.profiles[i])
                               .then(leg_piece(out.axes[i], out.cruise_start, leg_end));
        }
        clock += common.t_imp + (leg_end - out.cruise_start);
        plan.transitions.push_back(std::move(report));
    }
    return plan;
}

}  // namespace softmotion
