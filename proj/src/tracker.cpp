#include "softmotion/tracker.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "softmotion/general.hpp"

namespace softmotion {

OnlineTracker::OnlineTracker(std::vector<KinematicLimits> limits, std::vector<KinematicState> start,
                             double dt)
    : limits_(std::move(limits)), state_(std::move(start)), jerk_(state_.size(), 0.0), dt_(dt) {
    if (!(dt_ > 0.0) || !std::isfinite(dt_)) {
        throw std::invalid_argument("tracker tick must be positive");
    }
    if (limits_.size() != state_.size()) {
        throw std::invalid_argument("tracker: one limits entry per axis expected");
    }
    for (const auto& l : limits_) l.validate();
}

double OnlineTracker::clamp_reference(std::size_t axis, double v) const {
    const double vmax = limits_[axis].vmax;
    if (std::isnan(v)) return 0.0;
    return std::clamp(v, -vmax, vmax);
}

const std::vector<AxisProfile>& OnlineTracker::tick(std::span<const double> v_ref) {
    if (v_ref.size() != state_.size()) {
        throw std::invalid_argument("tracker: reference dimension mismatch");
    }
    plans_.clear();
    for (std::size_t i = 0; i < state_.size(); ++i) {
        const KinematicState& now = state_[i];
        KinematicState target{0.0, clamp_reference(i, v_ref[i]), 0.0};
        target.x = now.x + critical_length(now, target, limits_[i]);
        AxisProfile plan = plan_min_time_1d(now, target, limits_[i], time_);

        const double end = time_ + dt_;
        if (plan.end_time() >= end) {
            const Sample s = plan.evaluate(end);
            state_[i] = s.state;
            jerk_[i] = s.jerk;
        } else {
            // Reference reached inside the tick: coast at it.
            state_[i] = integrate_segment(plan.end_state(), 0.0, end - plan.end_time());
            jerk_[i] = 0.0;
        }
        plans_.push_back(std::move(plan));
    }
    time_ += dt_;
    return plans_;
}

bool OnlineTracker::settled(std::span<const double> v_ref, double tol) const {
    for (std::size_t i = 0; i < state_.size(); ++i) {
        if (std::abs(state_[i].a) > tol || std::abs(state_[i].v - clamp_reference(i, v_ref[i])) > tol) {
            return false;
        }
    }
    return true;
}

namespace {

std::vector<KinematicState> pose_states(const Pose& start) {
    std::vector<KinematicState> states;
    for (double x : to_coordinates(start)) states.push_back({0.0, 0.0, x});
    return states;
}

std::vector<KinematicLimits> pose_limits(const KinematicLimits& linear,
                                         const KinematicLimits& angular) {
    const auto limits = pose_axis_limits(linear, angular);
    return {limits.begin(), limits.end()};
}

}  // namespace

PoseTracker::PoseTracker(const KinematicLimits& linear, const KinematicLimits& angular,
                         const Pose& start, double dt)
    : tracker_(pose_limits(linear, angular), pose_states(start), dt) {
    require_unit(start.orient, "PoseTracker");
}

std::vector<double> PoseTracker::coordinate_rates(const Twist& reference) const {
    const Quaternion rate = omega_to_qdot(pose().orient, reference.w);
    return {reference.v[0], reference.v[1], reference.v[2], rate.n, rate.i, rate.j, rate.k};
}

Pose PoseTracker::pose() const {
    std::array<double, 7> c{};
    for (std::size_t i = 0; i < 7; ++i) c[i] = tracker_.state()[i].x;
    return from_coordinates(c);
}

void PoseTracker::tick(const Twist& reference) { tracker_.tick(coordinate_rates(reference)); }

bool PoseTracker::settled(const Twist& reference, double tol) const {
    return tracker_.settled(coordinate_rates(reference), tol);
}

}  // namespace softmotion
