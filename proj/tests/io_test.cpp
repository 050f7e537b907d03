#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "softmotion/io.hpp"
#include "softmotion/ptp.hpp"

namespace softmotion {
namespace {

TEST(ParseLimits, DefaultsAndOverrides) {
    std::istringstream in(
        "# desk arm\n"
        "linear.vmax = 0.2\n"
        "\n"
        "angular.jmax=0.5   # trailing comment\n");
    const LimitsConfig c = parse_limits(in);
    EXPECT_EQ(c.linear.vmax, 0.2);
    EXPECT_EQ(c.linear.jmax, 0.9);
    EXPECT_EQ(c.angular.jmax, 0.5);
    EXPECT_EQ(c.angular.vmax, 0.1);
}

TEST(ParseLimits, Rejects) {
    for (const char* text : {"linear.vmax = 0\n", "linear.speed = 1\n", "linear.vmax 0.1\n",
                             "linear.vmax = fast\n", "angular.amax = -1\n"}) {
        std::istringstream in(text);
        EXPECT_THROW((void)parse_limits(in), InputError) << text;
    }
    EXPECT_THROW((void)load_limits("/nonexistent/limits.txt"), InputError);
}

TEST(ParseVector, Values) {
    const auto v = parse_vector("0.1,-2,3e-3");
    ASSERT_EQ(v.size(), 3u);
    EXPECT_EQ(v[0], 0.1);
    EXPECT_EQ(v[1], -2.0);
    EXPECT_EQ(v[2], 3e-3);
    EXPECT_THROW((void)parse_vector("1,,2"), InputError);
    EXPECT_THROW((void)parse_vector("1,x"), InputError);
    EXPECT_THROW((void)parse_vector(""), InputError);
}

TEST(ParseWaypoints, ThreeAndSevenColumns) {
    std::istringstream three("# corner\n0,0,0\n0.15,0.15,0\n\n0.3,0.3,0.15\n");
    EXPECT_EQ(parse_waypoints(three).size(), 3u);
    std::istringstream seven("0,0,0,1,0,0,0\n0.1,0,0,1,0,0,0\n");
    EXPECT_EQ(parse_waypoints(seven)[1].size(), 7u);
    std::istringstream mixed("0,0,0\n0,0,0,1,0,0,0\n");
    EXPECT_THROW((void)parse_waypoints(mixed), InputError);
    std::istringstream four("0,0,0,0\n");
    EXPECT_THROW((void)parse_waypoints(four), InputError);
}

TEST(ParseReferenceLine, Values) {
    const auto s = parse_reference_line("0.5 0.1 0 0\t0 0 -0.02");
    ASSERT_TRUE(s);
    EXPECT_EQ(s->t, 0.5);
    EXPECT_EQ(s->twist.v[0], 0.1);
    EXPECT_EQ(s->twist.w[2], -0.02);
    EXPECT_FALSE(parse_reference_line("0.5 0.1 0 0 0 0"));
    EXPECT_FALSE(parse_reference_line("0.5 0.1 0 0 0 0 0 7"));
    EXPECT_FALSE(parse_reference_line("t vx vy vz wx wy wz"));
}

TEST(FormatNumber, NineSignificantDigits) {
    EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333");
    EXPECT_EQ(format_number(11.0 / 6.0), "1.83333333");
    EXPECT_EQ(format_number(0.15), "0.15");
    EXPECT_EQ(format_number(-0.0), "0");
    EXPECT_EQ(format_number(0.0), "0");
    EXPECT_EQ(format_number(1.5e-12), "1.5e-12");
}

TEST(Csv, HeaderNames) {
    EXPECT_EQ(axis_names(3), (std::vector<std::string>{"x", "y", "z"}));
    EXPECT_EQ(axis_names(7)[3], "qn");
    EXPECT_EQ(axis_names(2)[1], "a1");
    const auto names = axis_names(1);
    EXPECT_EQ(csv_header(names), "t,a0_pos,a0_vel,a0_acc,a0_jerk");
}

TEST(Csv, TrajectoryEndsOnExactFinalTime) {
    const std::vector<AxisProfile> axes{plan_ptp_1d(0.15, kDefaultLinearLimits)};
    std::ostringstream out;
    write_trajectory_csv(out, axes, 0.01);
    std::istringstream lines(out.str());
    std::string line, last;
    int rows = 0;
    while (std::getline(lines, line)) {
        last = line;
        ++rows;
    }
    EXPECT_EQ(rows, 1 + 184 + 1);  // header, t = 0 .. 1.83, then 1.8333..
    EXPECT_EQ(last.substr(0, last.find(',')), "1.83333333");
    EXPECT_EQ(last.substr(last.find(',') + 1, 4), "0.15");

    std::ostringstream again;
    write_trajectory_csv(again, axes, 0.01);
    EXPECT_EQ(out.str(), again.str());
}

}  // namespace
}  // namespace softmotion
