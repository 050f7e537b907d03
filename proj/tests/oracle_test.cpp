#include <gtest/gtest.h>

#include <stdexcept>

#include "softmotion/oracle.hpp"

namespace softmotion {
namespace {

const KinematicLimits kLinear = kDefaultLinearLimits;

TEST(Oracle, SameStateIsZero) {
    const auto r = brute_force_min_time({0.1, 0.05, 0.3}, {0.1, 0.05, 0.3}, kLinear, 0.01);
    EXPECT_EQ(r.status, OracleResult::Status::Found);
    EXPECT_EQ(r.time, 0.0);
}

TEST(Oracle, PureJerkMotion) {
    const auto r = brute_force_min_time({}, {0.0, 0.0, 0.0144}, kLinear, 0.004);
    ASSERT_EQ(r.status, OracleResult::Status::Found);
    EXPECT_NEAR(r.time, 0.8, 0.008);
}

TEST(Oracle, SevenSegmentMotion) {
    const auto r = brute_force_min_time({}, {0.0, 0.0, 0.15}, kLinear, 0.01);
    ASSERT_EQ(r.status, OracleResult::Status::Found);
    EXPECT_NEAR(r.time, 11.0 / 6.0, 0.02);
    EXPECT_GE(r.time, 11.0 / 6.0);
}

TEST(Oracle, CruiseBetweenMovingStates) {
    const auto r = brute_force_min_time({0.0, 0.15, 0.0}, {0.0, 0.15, 0.125}, kLinear, 0.01);
    ASSERT_EQ(r.status, OracleResult::Status::Found);
    EXPECT_NEAR(r.time, 0.125 / 0.15, 0.02);
}

TEST(Oracle, BudgetReportedSeparately) {
    OracleOptions tight;
    tight.node_cap = 100;
    auto r = brute_force_min_time({}, {0.0, 0.0, 0.15}, kLinear, 0.01, tight);
    EXPECT_EQ(r.status, OracleResult::Status::BudgetExceeded);
    OracleOptions short_horizon;
    short_horizon.horizon = 0.5;
    r = brute_force_min_time({}, {0.0, 0.0, 0.15}, kLinear, 0.01, short_horizon);
    EXPECT_EQ(r.status, OracleResult::Status::BudgetExceeded);
}

TEST(Oracle, RejectsBadInput) {
    EXPECT_THROW((void)brute_force_min_time({}, {}, kLinear, 0.0), std::invalid_argument);
    EXPECT_THROW((void)brute_force_min_time({0.5, 0.0, 0.0}, {}, kLinear, 0.01), std::invalid_argument);
    EXPECT_THROW((void)brute_force_min_time({}, {}, {0.0, 1.0, 1.0}, 0.01), std::invalid_argument);
}

}  // namespace
}  // namespace softmotion
