#include "softmotion/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace softmotion {

void KinematicLimits::validate() const {
    const auto ok = [](double value) { return std::isfinite(value) && value > 0.0; };
    if (!ok(jmax) || !ok(amax) || !ok(vmax)) {
        throw std::invalid_argument("kinematic limits must be finite and strictly positive");
    }
}

KinematicState integrate_segment(const KinematicState& start, double jerk, double dt) {
    if (!std::isfinite(start.a) || !std::isfinite(start.v) || !std::isfinite(start.x) ||
        !std::isfinite(jerk) || !std::isfinite(dt)) {
        throw std::invalid_argument("integrate_segment: non-finite input");
    }
    if (dt < 0.0) {
        throw std::invalid_argument("integrate_segment: negative duration");
    }
    const double dt2 = dt * dt;
    return {
        start.a + jerk * dt,
        start.v + start.a * dt + 0.5 * jerk * dt2,
        start.x + start.v * dt + 0.5 * start.a * dt2 + jerk * dt2 * dt / 6.0,
    };
}

AxisProfile::AxisProfile(KinematicState start, double t0) : start_(start), t0_(t0) {}

AxisProfile::AxisProfile(KinematicState start, std::span<const Phase> phases, double t0)
    : start_(start), t0_(t0) {
    KinematicState state = start;
    for (const Phase& phase : phases) {
        if (phase.duration < kMinSegmentDuration) {
            continue;
        }
        segments_.push_back({phase.duration, phase.jerk, state});
        state = segments_.back().end();
    }
}

double AxisProfile::duration() const {
    double total = 0.0;
    for (const auto& segment : segments_) {
        total += segment.duration;
    }
    return total;
}

std::vector<Phase> AxisProfile::phases() const {
    std::vector<Phase> out;
    out.reserve(segments_.size());
    for (const auto& segment : segments_) {
        out.push_back({segment.duration, segment.jerk});
    }
    return out;
}

KinematicState AxisProfile::end_state() const {
    return segments_.empty() ? start_ : segments_.back().end();
}

Sample AxisProfile::evaluate(double t) const {
    const double end = end_time();
    // Allow rounding slack at the ends of the span.
    const double slack = 1e-12 * std::max(1.0, std::abs(end));
    if (!(t >= t0_ - slack && t <= end + slack)) {
        throw std::out_of_range("AxisProfile::evaluate: time outside profile span");
    }
    if (segments_.empty()) {
        return {start_, 0.0};
    }
    double local = std::max(t - t0_, 0.0);
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        const auto& segment = segments_[i];
        if (local <= segment.duration || i + 1 == segments_.size()) {
            local = std::min(local, segment.duration);
            return {integrate_segment(segment.start, segment.jerk, local), segment.jerk};
        }
        local -= segment.duration;
    }
    return {end_state(), 0.0};  // unreachable
}

AxisProfile AxisProfile::shifted_to(double t0) const {
    AxisProfile out = *this;
    out.t0_ = t0;
    return out;
}

AxisProfile AxisProfile::slice(double from, double to) const {
    if (to < from) {
        throw std::invalid_argument("AxisProfile::slice: reversed interval");
    }
    const Sample first = evaluate(from);
    (void)evaluate(to);  // range check
    std::vector<Phase> kept;
    double seg_begin = t0_;
    for (const auto& segment : segments_) {
        const double seg_end = seg_begin + segment.duration;
        const double lo = std::max(seg_begin, from);
        const double hi = std::min(seg_end, to);
        if (hi > lo) {
            kept.push_back({hi - lo, segment.jerk});
        }
        seg_begin = seg_end;
    }
    return AxisProfile(first.state, kept, from);
}

AxisProfile AxisProfile::then(const AxisProfile& next) const {
    std::vector<Phase> all = phases();
    for (const auto& phase : next.phases()) {
        all.push_back(phase);
    }
    return AxisProfile(start_, all, t0_);
}

AxisProfile AxisProfile::then_hold(double duration) const {
    std::vector<Phase> all = phases();
    all.push_back({duration, 0.0});
    return AxisProfile(start_, all, t0_);
}

double phase_parabola(double v_at_zero_accel, double a, JerkBranch branch, double jmax) {
    const double offset = a * a / (2.0 * jmax);
    return branch == JerkBranch::Max ? v_at_zero_accel + offset : v_at_zero_accel - offset;
}

std::vector<LimitViolation> check_limits(const AxisProfile& profile, const KinematicLimits& limits,
                                         double tol) {
    using Quantity = LimitViolation::Quantity;
    std::vector<LimitViolation> report;
    double t = profile.t0();
    for (const auto& segment : profile.segments()) {
        const double t_end = t + segment.duration;
        if (std::abs(segment.jerk) > limits.jmax + tol) {
            report.push_back({Quantity::Jerk, t, t_end, segment.jerk});
        }

        const KinematicState end = segment.end();
        const double a_peak = std::abs(end.a) > std::abs(segment.start.a) ? end.a : segment.start.a;
        if (std::abs(a_peak) > limits.amax + tol) {
            report.push_back({Quantity::Acceleration, t, t_end, a_peak});
        }

        double v_peak = std::abs(end.v) > std::abs(segment.start.v) ? end.v : segment.start.v;
        if (segment.jerk != 0.0) {
            const double t_star = -segment.start.a / segment.jerk;
            if (t_star > 0.0 && t_star < segment.duration) {
                const double v_star = integrate_segment(segment.start, segment.jerk, t_star).v;
                if (std::abs(v_star) > std::abs(v_peak)) {
                    v_peak = v_star;
                }
            }
        }
        if (std::abs(v_peak) > limits.vmax + tol) {
            report.push_back({Quantity::Velocity, t, t_end, v_peak});
        }
        t = t_end;
    }
    return report;
}

}  // namespace softmotion
