#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>

#include "softmotion/general.hpp"
#include "softmotion/profile.hpp"

namespace softmotion::testing {

inline constexpr KinematicLimits kLinear = kDefaultLinearLimits;

// Random boundary problems inside the limits, reproducible from a seed.
class ProblemSource {
   public:
    explicit ProblemSource(std::uint64_t seed, const KinematicLimits& limits = kLinear)
        : rng_(seed), limits_(limits) {}

    KinematicState start() {
        for (;;) {
            KinematicState s{uniform(limits_.amax), uniform(limits_.vmax), uniform(0.2)};
            if (is_admissible_start(s, limits_)) return s;
        }
    }

    KinematicState end() {
        for (;;) {
            KinematicState s{uniform(limits_.amax), uniform(limits_.vmax), uniform(0.2)};
            if (is_admissible_end(s, limits_)) return s;
        }
    }

    double uniform(double half_width) {
        return std::uniform_real_distribution<double>(-half_width, half_width)(rng_);
    }

    std::mt19937_64& rng() { return rng_; }

   private:
    std::mt19937_64 rng_;
    KinematicLimits limits_;
};

inline double max_state_error(const KinematicState& a, const KinematicState& b) {
    return std::max({std::abs(a.a - b.a), std::abs(a.v - b.v), std::abs(a.x - b.x)});
}

// Largest jump in a, v or x between consecutive segments, or between the profile and the
// states it should start and end at.
inline double chain_error(const AxisProfile& profile) {
    double worst = 0.0;
    const auto& segs = profile.segments();
    for (std::size_t i = 1; i < segs.size(); ++i) {
        worst = std::max(worst, max_state_error(segs[i - 1].end(), segs[i].start));
    }
    return worst;
}

}  // namespace softmotion::testing
