#include "softmotion/sync.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "softmotion/ptp.hpp"

namespace softmotion {

std::vector<AxisProfile> plan_ptp_nd(std::span<const double> p0, std::span<const double> pf,
                                     const KinematicLimits& limits, double t0) {
    limits.validate();
    return plan_line(p0, pf, std::span(&limits, 1), t0);
}

KinematicLimits line_progress_limits(std::span<const double> p0, std::span<const double> pf,
                                     std::span<const KinematicLimits> limits) {
    if (p0.size() != pf.size()) {
        throw std::invalid_argument("plan_line: endpoint dimensions differ");
    }
    if (limits.size() != 1 && limits.size() != p0.size()) {
        throw std::invalid_argument("plan_line: one limits entry per axis expected");
    }
    constexpr double inf = std::numeric_limits<double>::infinity();
    KinematicLimits progress{inf, inf, inf};
    for (std::size_t i = 0; i < p0.size(); ++i) {
        const double distance = std::abs(pf[i] - p0[i]);
        if (distance == 0.0) continue;
        const KinematicLimits& axis = limits.size() == 1 ? limits[0] : limits[i];
        axis.validate();
        progress.jmax = std::min(progress.jmax, axis.jmax / distance);
        progress.amax = std::min(progress.amax, axis.amax / distance);
        progress.vmax = std::min(progress.vmax, axis.vmax / distance);
    }
    if (progress.jmax == inf) {
        throw std::invalid_argument("plan_line: endpoints coincide");
    }
    return progress;
}

std::vector<AxisProfile> plan_line(std::span<const double> p0, std::span<const double> pf,
                                   std::span<const KinematicLimits> limits, double t0) {
    const bool moving = !std::equal(p0.begin(), p0.end(), pf.begin(), pf.end());
    std::vector<AxisProfile> profiles;
    if (!moving) {
        if (p0.size() != pf.size()) {
            throw std::invalid_argument("plan_line: endpoint dimensions differ");
        }
        for (double x : p0) profiles.emplace_back(KinematicState{0.0, 0.0, x}, t0);
        return profiles;
    }
    const std::vector<Phase> shape = plan_ptp_1d(1.0, line_progress_limits(p0, pf, limits)).phases();
    for (std::size_t i = 0; i < p0.size(); ++i) {
        const double distance = pf[i] - p0[i];
        if (distance == 0.0) {
            profiles.emplace_back(KinematicState{0.0, 0.0, p0[i]}, t0);
            continue;
        }
        std::vector<Phase> phases = shape;
        for (auto& phase : phases) phase.jerk *= distance;
        profiles.emplace_back(KinematicState{0.0, 0.0, p0[i]}, phases, t0);
    }
    return profiles;
}

KinematicLimits scale_limits_for_duration(const KinematicLimits& limits, double t_opt,
                                          double t_imp) {
    limits.validate();
    if (!(t_opt > 0.0) || !(t_imp >= t_opt) || !std::isfinite(t_imp)) {
        throw std::invalid_argument("scale_limits_for_duration: need t_imp >= t_opt > 0");
    }
    const double s = t_imp / t_opt;
    return {limits.jmax / (s * s * s), limits.amax / (s * s), limits.vmax / s};
}

}  // namespace softmotion
