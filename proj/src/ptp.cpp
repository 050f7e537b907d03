#include "softmotion/ptp.hpp"

#include <array>
#include <cmath>

namespace softmotion {

double ptp_saturation_threshold(const KinematicLimits& limits) {
    limits.validate();
    const auto& [jmax, amax, vmax] = limits;
    if (vmax * jmax >= amax * amax) {
        const double tj = amax / jmax;
        const double ta = vmax / amax - amax / jmax;
        return vmax * (2.0 * tj + ta);
    }
    return 2.0 * vmax * std::sqrt(vmax / jmax);
}

PtpTimes ptp_times(double distance, const KinematicLimits& limits) {
    limits.validate();
    const auto& [jmax, amax, vmax] = limits;
    const double d = std::abs(distance);
    if (d == 0.0) {
        return {};
    }

    const double threshold = ptp_saturation_threshold(limits);
    const bool plateau_possible = vmax * jmax >= amax * amax;
    if (d >= threshold) {
        PtpTimes times;
        if (plateau_possible) {
            times.tj = amax / jmax;
            times.ta = vmax / amax - amax / jmax;
        } else {
            times.tj = std::sqrt(vmax / jmax);
        }
        times.tv = (d - threshold) / vmax;
        return times;
    }

    // Below the cruise threshold: either pure jerk phases or jerk plus acceleration plateaus.
    const double tj_amax = amax / jmax;
    if (!plateau_possible || d <= 2.0 * jmax * tj_amax * tj_amax * tj_amax) {
        return {std::cbrt(d / (2.0 * jmax)), 0.0, 0.0};
    }
    // d = amax (Tj + Ta)(2 Tj + Ta) with Tj = amax / jmax.
    const double tj = tj_amax;
    const double ta = 0.5 * (-3.0 * tj + std::sqrt(tj * tj + 4.0 * d / amax));
    return {tj, ta, 0.0};
}

AxisProfile plan_ptp_1d(double distance, const KinematicLimits& limits, double start, double t0) {
    const PtpTimes times = ptp_times(distance, limits);
    const double j = distance < 0.0 ? -limits.jmax : limits.jmax;
    const std::array<Phase, 7> phases{{
        {times.tj, j},
        {times.ta, 0.0},
        {times.tj, -j},
        {times.tv, 0.0},
        {times.tj, -j},
        {times.ta, 0.0},
        {times.tj, j},
    }};
    return AxisProfile({0.0, 0.0, start}, phases, t0);
}

}  // namespace softmotion
