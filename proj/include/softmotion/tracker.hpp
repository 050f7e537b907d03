#pragma once

#include <span>
#include <vector>

#include "softmotion/orientation.hpp"
#include "softmotion/profile.hpp"

namespace softmotion {

inline constexpr double kDefaultTick = 0.01;

// Fixed-tick velocity tracking. Each tick, every axis is replanned from its current state to
// zero acceleration at the (clamped) reference velocity over exactly the critical length, and
// advanced one tick along that plan. Not thread-safe; one caller drives an instance.
class OnlineTracker {
   public:
    OnlineTracker(std::vector<KinematicLimits> limits, std::vector<KinematicState> start,
                  double dt = kDefaultTick);

    // Returns the per-axis plans made for this tick (starting at the previous time).
    const std::vector<AxisProfile>& tick(std::span<const double> v_ref);

    [[nodiscard]] const std::vector<KinematicState>& state() const { return state_; }
    [[nodiscard]] const std::vector<double>& jerk() const { return jerk_; }
    [[nodiscard]] double time() const { return time_; }
    [[nodiscard]] double dt() const { return dt_; }
    [[nodiscard]] std::size_t axes() const { return state_.size(); }

    // True once every axis sits at zero acceleration and at its clamped reference.
    [[nodiscard]] bool settled(std::span<const double> v_ref, double tol = 1e-9) const;

   private:
    [[nodiscard]] double clamp_reference(std::size_t axis, double v) const;

    std::vector<KinematicLimits> limits_;
    std::vector<KinematicState> state_;
    std::vector<double> jerk_;
    std::vector<AxisProfile> plans_;
    double dt_;
    double time_ = 0.0;
};

// Tracker over the seven pose coordinates driven by a twist. Quaternion rates are derived from
// the angular velocity at the current (renormalized) orientation.
class PoseTracker {
   public:
    PoseTracker(const KinematicLimits& linear, const KinematicLimits& angular, const Pose& start = {},
                double dt = kDefaultTick);

    void tick(const Twist& reference);

    [[nodiscard]] std::vector<double> coordinate_rates(const Twist& reference) const;
    [[nodiscard]] Pose pose() const;
    [[nodiscard]] const OnlineTracker& axes() const { return tracker_; }
    [[nodiscard]] bool settled(const Twist& reference, double tol = 1e-9) const;

   private:
    OnlineTracker tracker_;
};

}  // namespace softmotion
