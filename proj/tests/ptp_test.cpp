#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "softmotion/oracle.hpp"
#include "softmotion/ptp.hpp"
#include "support.hpp"

namespace softmotion {
namespace {

using testing::kLinear;

TEST(PtpTimes, FullSevenSegments) {
    const PtpTimes t = ptp_times(0.15, kLinear);
    EXPECT_NEAR(t.tj, 1.0 / 3.0, 1e-12);
    EXPECT_NEAR(t.ta, 1.0 / 6.0, 1e-12);
    EXPECT_NEAR(t.tv, 1.0 / 6.0, 1e-12);
    EXPECT_NEAR(t.total(), 11.0 / 6.0, 1e-12);
}

TEST(PtpTimes, PureJerk) {
    const PtpTimes t = ptp_times(0.0144, kLinear);
    EXPECT_NEAR(t.tj, 0.2, 1e-12);
    EXPECT_EQ(t.ta, 0.0);
    EXPECT_EQ(t.tv, 0.0);
    EXPECT_NEAR(t.total(), 0.8, 1e-12);
}

TEST(PlanPtp, ProfileShape) {
    const AxisProfile p = plan_ptp_1d(0.15, kLinear);
    ASSERT_EQ(p.segments().size(), 7u);
    const double pattern[] = {0.9, 0, -0.9, 0, -0.9, 0, 0.9};
    for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(p.segments()[i].jerk, pattern[i]);
    EXPECT_NEAR(p.duration(), 1.8333333333333333, 1e-12);
    EXPECT_LE(testing::max_state_error(p.end_state(), {0.0, 0.0, 0.15}), 1e-12);
}

TEST(PlanPtp, ZeroDistance) {
    const AxisProfile p = plan_ptp_1d(0.0, kLinear, 2.0);
    EXPECT_TRUE(p.empty());
    EXPECT_EQ(p.duration(), 0.0);
    EXPECT_EQ(p.evaluate(0.0).state.x, 2.0);
}

TEST(PlanPtp, NegativeDistanceMirrors) {
    const AxisProfile pos = plan_ptp_1d(0.2, kLinear);
    const AxisProfile neg = plan_ptp_1d(-0.2, kLinear, 1.0);
    ASSERT_EQ(pos.segments().size(), neg.segments().size());
    for (std::size_t i = 0; i < pos.segments().size(); ++i) {
        EXPECT_EQ(pos.segments()[i].jerk, -neg.segments()[i].jerk);
        EXPECT_EQ(pos.segments()[i].duration, neg.segments()[i].duration);
    }
    EXPECT_NEAR(neg.end_state().x, 0.8, 1e-12);
}

TEST(PlanPtp, VelocitySymmetricAccelerationAntisymmetric) {
    for (double d : {0.01, 0.09, 0.3}) {
        const AxisProfile p = plan_ptp_1d(d, kLinear);
        const double T = p.duration();
        for (int k = 0; k <= 50; ++k) {
            const double t = T * k / 100.0;
            const auto early = p.evaluate(t).state;
            const auto late = p.evaluate(T - t).state;
            EXPECT_NEAR(early.v, late.v, 1e-12);
            EXPECT_NEAR(early.a, -late.a, 1e-12);
        }
    }
}

TEST(SaturationThreshold, Values) {
    EXPECT_NEAR(ptp_saturation_threshold(kLinear), 0.125, 1e-12);
    EXPECT_NEAR(ptp_saturation_threshold({0.9, 10.0, 0.15}), 2 * 0.15 * std::sqrt(0.15 / 0.9), 1e-12);
    EXPECT_NEAR(ptp_saturation_threshold({0.9, 10.0, 0.15}), 0.12247, 1e-5);
    EXPECT_EQ(ptp_times(ptp_saturation_threshold(kLinear), kLinear).tv, 0.0);
    EXPECT_GT(ptp_times(0.126, kLinear).tv, 0.0);
}

TEST(PlanPtp, LimitsAndBoundariesOnRandomDistances) {
    testing::ProblemSource src(31);
    for (int i = 0; i < 300; ++i) {
        const double d = src.uniform(1.0);
        const AxisProfile p = plan_ptp_1d(d, kLinear);
        EXPECT_TRUE(check_limits(p, kLinear).empty()) << d;
        EXPECT_LE(testing::max_state_error(p.end_state(), {0.0, 0.0, d}), 1e-9) << d;
        EXPECT_LE(p.segments().size(), 7u);
    }
}

TEST(PlanPtp, TimeContinuousAcrossCaseBoundaries) {
    // Ta appears at 0.0667 m, the cruise at 0.125 m.
    double previous = plan_ptp_1d(0.05, kLinear).duration();
    for (double d = 0.05 + 1e-4; d < 0.15; d += 1e-4) {
        const double t = plan_ptp_1d(d, kLinear).duration();
        EXPECT_GE(t, previous - 1e-12);
        EXPECT_LT(t - previous, 1e-3) << d;
        previous = t;
    }
}

TEST(PlanPtp, NotSlowerThanOracle) {
    const double dt = 0.01;
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> distance(0.001, 0.5);
    for (int i = 0; i < 20; ++i) {
        const double d = distance(rng);
        const auto r = brute_force_min_time({}, {0.0, 0.0, d}, kLinear, dt);
        ASSERT_EQ(r.status, OracleResult::Status::Found) << d;
        // oracle times are attainable, so the planner can only be faster, and not by much
        const double t = plan_ptp_1d(d, kLinear).duration();
        EXPECT_LE(t, r.time + 1e-9) << d;
        EXPECT_GE(t, r.time - 2 * dt) << d;
    }
}

}  // namespace
}  // namespace softmotion
