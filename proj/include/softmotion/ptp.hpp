#pragma once

#include "softmotion/profile.hpp"

namespace softmotion {

// Segment times of the symmetric rest-to-rest profile: Tj for each of the four jerk
// phases, Ta for each of the two constant-acceleration phases, Tv for the cruise.
struct PtpTimes {
    double tj = 0.0;
    double ta = 0.0;
    double tv = 0.0;

    [[nodiscard]] double total() const { return 4.0 * tj + 2.0 * ta + tv; }
};

PtpTimes ptp_times(double distance, const KinematicLimits& limits);

// Minimal-time rest-to-rest motion over `distance` (signed), starting at `start`.
// Jerk pattern [+J, 0, -J, 0, -J, 0, +J], mirrored for negative distances.
AxisProfile plan_ptp_1d(double distance, const KinematicLimits& limits, double start = 0.0,
                        double t0 = 0.0);

// Smallest distance for which the cruise velocity reaches vmax.
double ptp_saturation_threshold(const KinematicLimits& limits);

}  // namespace softmotion
