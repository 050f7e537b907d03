#pragma once

#include <span>
#include <vector>

namespace softmotion {

// Instantaneous state of one axis.
struct KinematicState {
    double a = 0.0;
    double v = 0.0;
    double x = 0.0;
};

// Symmetric bounds: jerk in [-jmax, jmax], and likewise for acceleration and velocity.
struct KinematicLimits {
    double jmax = 0.0;
    double amax = 0.0;
    double vmax = 0.0;

    // Throws std::invalid_argument unless all three bounds are finite and positive.
    void validate() const;
};

// Bounds used on the end effector of the reference platform: linear (m) and angular (rad).
inline constexpr KinematicLimits kDefaultLinearLimits{0.900, 0.300, 0.150};
inline constexpr KinematicLimits kDefaultAngularLimits{0.600, 0.200, 0.100};

// Segments shorter than this are dropped when a profile is built.
inline constexpr double kMinSegmentDuration = 1e-12;

// Absolute tolerance for matching boundary states.
inline constexpr double kBoundaryTolerance = 1e-9;

// Advances `start` by `dt` under constant `jerk` using the exact cubic closed form.
KinematicState integrate_segment(const KinematicState& start, double jerk, double dt);

// A constant-jerk piece.
struct CubicSegment {
    double duration = 0.0;
    double jerk = 0.0;
    KinematicState start;

    [[nodiscard]] KinematicState end() const { return integrate_segment(start, jerk, duration); }
};

// A (duration, jerk) pair, the unit from which profiles are assembled.
struct Phase {
    double duration = 0.0;
    double jerk = 0.0;
};

struct Sample {
    KinematicState state;
    double jerk = 0.0;
};

// Piecewise-cubic trajectory of a single axis, starting at time t0.
//
// Segment start states are always produced by integrating the previous segment, so the
// chain is continuous by construction. Immutable once built.
class AxisProfile {
   public:
    AxisProfile() = default;
    explicit AxisProfile(KinematicState start, double t0 = 0.0);
    AxisProfile(KinematicState start, std::span<const Phase> phases, double t0 = 0.0);

    [[nodiscard]] double t0() const { return t0_; }
    [[nodiscard]] double duration() const;
    [[nodiscard]] double end_time() const { return t0_ + duration(); }
    [[nodiscard]] bool empty() const { return segments_.empty(); }

    [[nodiscard]] const std::vector<CubicSegment>& segments() const { return segments_; }
    [[nodiscard]] std::vector<Phase> phases() const;

    [[nodiscard]] KinematicState start_state() const { return start_; }
    [[nodiscard]] KinematicState end_state() const;

    // State and jerk at absolute time t. Throws std::out_of_range outside [t0, end_time].
    [[nodiscard]] Sample evaluate(double t) const;

    // Same motion re-anchored at a new start time.
    [[nodiscard]] AxisProfile shifted_to(double t0) const;

    // Portion of the profile between absolute times [from, to], keeping absolute timing.
    [[nodiscard]] AxisProfile slice(double from, double to) const;

    // This profile followed by the phases of `next`, integrated from this profile's end state.
    [[nodiscard]] AxisProfile then(const AxisProfile& next) const;

    // This profile followed by a zero-jerk hold of the given duration.
    [[nodiscard]] AxisProfile then_hold(double duration) const;

   private:
    KinematicState start_;
    double t0_ = 0.0;
    std::vector<CubicSegment> segments_;
};

// Velocity on the saturated-jerk parabola through (0, v_at_zero_accel) at acceleration a.
enum class JerkBranch { Max, Min };
double phase_parabola(double v_at_zero_accel, double a, JerkBranch branch, double jmax);

struct LimitViolation {
    enum class Quantity { Jerk, Acceleration, Velocity };

    Quantity quantity;
    double t_begin;
    double t_end;
    double peak;  // signed extreme value inside [t_begin, t_end]
};

// Exact per-segment limit check: velocity extrema where a = 0 inside a segment,
// acceleration extrema at segment ends.
std::vector<LimitViolation> check_limits(const AxisProfile& profile, const KinematicLimits& limits,
                                         double tol = 1e-9);

}  // namespace softmotion
