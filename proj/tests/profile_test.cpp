#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "softmotion/profile.hpp"
#include "support.hpp"

namespace softmotion {
namespace {

TEST(IntegrateSegment, JerkRampFromRest) {
    const KinematicState s = integrate_segment({}, 0.9, 1.0 / 3.0);
    EXPECT_NEAR(s.a, 0.3, 1e-15);
    EXPECT_NEAR(s.v, 0.05, 1e-15);
    EXPECT_NEAR(s.x, 0.9 / 162.0, 1e-15);  // J t^3 / 6
}

TEST(IntegrateSegment, MatchesFineExplicitStepping) {
    const KinematicState start{0.12, -0.04, 0.3};
    const double jerk = -0.7, duration = 0.8;
    KinematicState s = start;
    const int steps = 800'000;
    const double h = duration / steps;
    for (int k = 0; k < steps; ++k) {
        s.x += h * s.v;
        s.v += h * s.a;
        s.a += h * jerk;
    }
    const KinematicState exact = integrate_segment(start, jerk, duration);
    EXPECT_NEAR(exact.a, s.a, 1e-9);
    EXPECT_NEAR(exact.v, s.v, 1e-6);
    EXPECT_NEAR(exact.x, s.x, 1e-6);
}

TEST(IntegrateSegment, ZeroDurationIsIdentity) {
    const KinematicState s{0.1, -0.2, 3.0};
    const KinematicState out = integrate_segment(s, 0.9, 0.0);
    EXPECT_EQ(out.a, s.a);
    EXPECT_EQ(out.v, s.v);
    EXPECT_EQ(out.x, s.x);
}

TEST(IntegrateSegment, CruiseCoversDistance) {
    const KinematicState s = integrate_segment({0.0, 0.15, 0.0}, 0.0, 0.125 / 0.15);
    EXPECT_NEAR(s.x, 0.125, 1e-15);
    EXPECT_EQ(s.v, 0.15);
}

TEST(IntegrateSegment, SplitsExactly) {
    testing::ProblemSource src(11);
    for (int i = 0; i < 200; ++i) {
        const KinematicState s{src.uniform(1.0), src.uniform(1.0), src.uniform(1.0)};
        const double j = src.uniform(2.0), t1 = 0.5 + src.uniform(0.5), t2 = 0.5 + src.uniform(0.5);
        const KinematicState whole = integrate_segment(s, j, t1 + t2);
        const KinematicState split = integrate_segment(integrate_segment(s, j, t1), j, t2);
        const double scale = 1.0 + std::abs(whole.x) + std::abs(whole.v) + std::abs(whole.a);
        EXPECT_LE(testing::max_state_error(whole, split), 1e-12 * scale);
    }
}

TEST(IntegrateSegment, RejectsBadInput) {
    EXPECT_THROW((void)integrate_segment({}, NAN, 1.0), std::invalid_argument);
    EXPECT_THROW((void)integrate_segment({INFINITY, 0, 0}, 0.0, 1.0), std::invalid_argument);
    EXPECT_THROW((void)integrate_segment({}, 0.0, -1.0), std::invalid_argument);
}

TEST(AxisProfile, EvaluateAtEnds) {
    const std::vector<Phase> phases{{0.2, 0.9}, {0.1, 0.0}, {0.2, -0.9}};
    const KinematicState start{0.0, 0.01, 1.0};
    const AxisProfile p(start, phases, 2.0);
    EXPECT_DOUBLE_EQ(p.duration(), 0.5);
    EXPECT_EQ(testing::max_state_error(p.evaluate(2.0).state, start), 0.0);
    EXPECT_LE(testing::max_state_error(p.evaluate(2.5).state, p.end_state()), 1e-12);
    EXPECT_THROW((void)p.evaluate(1.9), std::out_of_range);
    EXPECT_THROW((void)p.evaluate(2.6), std::out_of_range);
}

TEST(AxisProfile, DropsNegligibleSegments) {
    const std::vector<Phase> phases{{1e-13, 0.9}, {0.3, 0.9}, {0.0, 0.0}};
    const AxisProfile p({}, phases);
    EXPECT_EQ(p.segments().size(), 1u);
}

TEST(AxisProfile, SliceAndThenKeepTheMotion) {
    const std::vector<Phase> phases{{0.3, 0.9}, {0.2, 0.0}, {0.3, -0.9}};
    const AxisProfile p({0.0, 0.02, 0.0}, phases);
    const AxisProfile head = p.slice(0.0, 0.4);
    const AxisProfile tail = p.slice(0.4, 0.8);
    EXPECT_DOUBLE_EQ(tail.t0(), 0.4);
    const AxisProfile joined = head.then(tail);
    for (double t = 0.0; t <= 0.8; t += 0.01) {
        EXPECT_LE(testing::max_state_error(joined.evaluate(t).state, p.evaluate(t).state), 1e-12);
    }
    const AxisProfile held = p.then_hold(0.5);
    EXPECT_NEAR(held.end_state().x - p.end_state().x, 0.5 * p.end_state().v, 1e-12);
}

TEST(PhaseParabola, Values) {
    EXPECT_EQ(phase_parabola(0.0, 0.0, JerkBranch::Max, 0.9), 0.0);
    EXPECT_EQ(phase_parabola(0.0, 0.0, JerkBranch::Min, 0.9), 0.0);
    EXPECT_NEAR(phase_parabola(0.1, 0.3, JerkBranch::Max, 0.9), 0.15, 1e-15);
    EXPECT_NEAR(phase_parabola(0.1, 0.3, JerkBranch::Min, 0.9), 0.05, 1e-15);
    EXPECT_EQ(phase_parabola(0.1, 0.3, JerkBranch::Max, 0.9),
              phase_parabola(0.1, -0.3, JerkBranch::Max, 0.9));
}

TEST(PhaseParabola, SaturatedJerkStaysOnItsParabola) {
    testing::ProblemSource src(12);
    for (int i = 0; i < 100; ++i) {
        const KinematicState s{src.uniform(0.3), src.uniform(0.15), 0.0};
        const double t = 0.1 + src.uniform(0.1);
        // +J keeps v - a^2/2J fixed, -J keeps v + a^2/2J fixed
        const KinematicState up = integrate_segment(s, 0.9, t);
        EXPECT_NEAR(phase_parabola(s.v - s.a * s.a / 1.8, up.a, JerkBranch::Max, 0.9), up.v, 1e-12);
        const KinematicState down = integrate_segment(s, -0.9, t);
        EXPECT_NEAR(phase_parabola(s.v + s.a * s.a / 1.8, down.a, JerkBranch::Min, 0.9), down.v,
                    1e-12);
    }
}

TEST(CheckLimits, FlagsExcessJerk) {
    const std::vector<Phase> phases{{0.1, 1.8}};
    const AxisProfile p({}, phases);
    const auto report = check_limits(p, testing::kLinear);
    ASSERT_EQ(report.size(), 1u);
    EXPECT_EQ(report[0].quantity, LimitViolation::Quantity::Jerk);
}

TEST(CheckLimits, FindsVelocityPeakInsideSegment) {
    // a crosses zero at t = 1/3, where v = 0.12 + 0.3^2 / 1.8
    const std::vector<Phase> phases{{2.0 / 3.0, -0.9}};
    const AxisProfile p({0.3, 0.12, 0.0}, phases);
    const auto report = check_limits(p, testing::kLinear);
    ASSERT_EQ(report.size(), 1u);
    EXPECT_EQ(report[0].quantity, LimitViolation::Quantity::Velocity);
    EXPECT_NEAR(report[0].peak, 0.17, 1e-12);
}

TEST(CheckLimits, FlagsAcceleration) {
    const std::vector<Phase> phases{{0.5, 0.9}};
    const auto report = check_limits(AxisProfile({}, phases), {0.9, 0.3, 10.0});
    ASSERT_EQ(report.size(), 1u);
    EXPECT_EQ(report[0].quantity, LimitViolation::Quantity::Acceleration);
    EXPECT_NEAR(report[0].peak, 0.45, 1e-12);
}

}  // namespace
}  // namespace softmotion
