#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "softmotion/orientation.hpp"

namespace softmotion {
namespace {

const KinematicLimits kLinear = kDefaultLinearLimits;
const KinematicLimits kAngular = kDefaultAngularLimits;

Quaternion random_unit(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    return Quaternion{g(rng), g(rng), g(rng), g(rng)}.normalized();
}

Quaternion about_z(double angle) { return {std::cos(angle / 2), 0.0, 0.0, std::sin(angle / 2)}; }

TEST(OmegaToQdot, Examples) {
    const Quaternion zero = omega_to_qdot({}, {0.0, 0.0, 0.0});
    EXPECT_EQ(zero.n, 0.0);
    EXPECT_EQ(zero.i, 0.0);
    const Quaternion roll = omega_to_qdot({}, {0.2, 0.0, 0.0});
    EXPECT_NEAR(roll.n, 0.0, 1e-15);
    EXPECT_NEAR(roll.i, 0.1, 1e-15);
    EXPECT_NEAR(roll.j, 0.0, 1e-15);
    EXPECT_NEAR(roll.k, 0.0, 1e-15);
    EXPECT_THROW((void)omega_to_qdot({2.0, 0.0, 0.0, 0.0}, {0.1, 0.0, 0.0}), std::invalid_argument);
}

TEST(OmegaToQdot, MatchesHamiltonProduct) {
    std::mt19937_64 rng(81);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const Quaternion q = random_unit(rng);
        const Vec3 w{u(rng), u(rng), u(rng)};
        const Quaternion rate = omega_to_qdot(q, w);
        const Quaternion ref = Quaternion{0.0, w[0], w[1], w[2]} * q;
        EXPECT_NEAR(rate.n, 0.5 * ref.n, 1e-15);
        EXPECT_NEAR(rate.i, 0.5 * ref.i, 1e-15);
        EXPECT_NEAR(rate.j, 0.5 * ref.j, 1e-15);
        EXPECT_NEAR(rate.k, 0.5 * ref.k, 1e-15);
        EXPECT_NEAR(rate.dot(q), 0.0, 1e-15);
    }
}

TEST(QdotToOmega, Examples) {
    const OmegaResult still = qdot_to_omega({}, {0.0, 0.0, 0.0, 0.0});
    EXPECT_EQ(still.w[0], 0.0);
    EXPECT_EQ(still.residual, 0.0);
    const OmegaResult roll = qdot_to_omega({}, {0.0, 0.1, 0.0, 0.0});
    EXPECT_NEAR(roll.w[0], 0.2, 1e-15);
    EXPECT_NEAR(roll.w[1], 0.0, 1e-15);
    EXPECT_NEAR(roll.w[2], 0.0, 1e-15);
    EXPECT_NEAR(roll.residual, 0.0, 1e-15);
}

TEST(QrMatrix, OrthogonalForUnitQuaternions) {
    std::mt19937_64 rng(82);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = qr_matrix(random_unit(rng));
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                double dot = 0.0;
                for (int k = 0; k < 4; ++k) dot += m[k][r] * m[k][c];
                EXPECT_NEAR(dot, r == c ? 1.0 : 0.0, 1e-12);
            }
        }
    }
}

TEST(QdotToOmega, RoundTrip) {
    std::mt19937_64 rng(83);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const Quaternion q = random_unit(rng);
        const Vec3 w{u(rng), u(rng), u(rng)};
        const OmegaResult back = qdot_to_omega(q, omega_to_qdot(q, w));
        for (int k = 0; k < 3; ++k) EXPECT_NEAR(back.w[k], w[k], 1e-12);
        EXPECT_NEAR(back.residual, 0.0, 1e-12);
    }
}

TEST(PlanPoseAxes, SamePoseIsEmpty) {
    const Pose p{{0.1, 0.2, 0.3}, about_z(0.4)};
    for (const auto& axis : plan_pose_axes(p, p, kLinear, kAngular)) EXPECT_TRUE(axis.empty());
}

TEST(PlanPoseAxes, TranslationLeavesOrientation) {
    const Pose a{{0.0, 0.0, 0.0}, about_z(0.3)};
    const Pose b{{0.2, -0.1, 0.05}, about_z(0.3)};
    const auto axes = plan_pose_axes(a, b, kLinear, kAngular);
    for (std::size_t k = 3; k < 7; ++k) EXPECT_TRUE(axes[k].empty());
    EXPECT_NEAR(axes[0].end_state().x, 0.2, 1e-9);
}

TEST(PlanPoseAxes, QuarterTurnKeepsNormAndHemisphere) {
    const Pose a{};
    const Pose b{{0.0, 0.0, 0.0}, about_z(std::numbers::pi / 2)};
    const auto axes = plan_pose_axes(a, b, kLinear, kAngular);
    const double end = axes[3].end_time();
    const auto limits = pose_axis_limits(kLinear, kAngular);
    double worst = 0.0;
    for (double t = 0.0; t <= end; t += 0.01) {
        Quaternion q{axes[3].evaluate(t).state.x, axes[4].evaluate(t).state.x,
                     axes[5].evaluate(t).state.x, axes[6].evaluate(t).state.x};
        worst = std::max(worst, std::abs(q.norm() - 1.0));
        EXPECT_GE(q.dot(a.orient), 0.0);
    }
    EXPECT_LT(worst, 1e-2);
    for (std::size_t k = 3; k < 7; ++k) EXPECT_TRUE(check_limits(axes[k], limits[k]).empty());
    EXPECT_NEAR(axes[3].end_state().x, b.orient.n, 1e-9);
    EXPECT_NEAR(axes[6].end_state().x, b.orient.k, 1e-9);
}

TEST(PlanPoseAxes, FlipsTargetIntoStartHemisphere) {
    const Pose a{};
    const Pose b{{0.0, 0.0, 0.0}, -about_z(0.2)};
    const auto axes = plan_pose_axes(a, b, kLinear, kAngular);
    EXPECT_NEAR(axes[3].end_state().x, std::cos(0.1), 1e-9);
}

TEST(Slerp, Endpoints) {
    const Quaternion a = about_z(0.2), b = about_z(1.0);
    const Quaternion mid = slerp(a, b, 0.5);
    EXPECT_NEAR(mid.n, std::cos(0.3), 1e-12);
    EXPECT_NEAR(mid.k, std::sin(0.3), 1e-12);
}

}  // namespace
}  // namespace softmotion
