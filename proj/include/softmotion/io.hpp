#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "softmotion/orientation.hpp"
#include "softmotion/profile.hpp"

namespace softmotion {

// Thrown for malformed input files and arguments.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LimitsConfig {
    KinematicLimits linear = kDefaultLinearLimits;
    KinematicLimits angular = kDefaultAngularLimits;
};

// `key = value` lines with keys linear.{jmax,amax,vmax} and angular.{jmax,amax,vmax}; `#` starts
// a comment. Missing keys keep their defaults. The result is validated.
LimitsConfig parse_limits(std::istream& in);
LimitsConfig load_limits(const std::string& path);

// Comma-separated decimals, e.g. "0.1,-2,3e-3".
std::vector<double> parse_vector(std::string_view text);

// One waypoint per line (3 or 7 numbers, all lines alike); blank lines and `#` comments skipped.
std::vector<std::vector<double>> parse_waypoints(std::istream& in);

struct ReferenceSample {
    double t = 0.0;
    Twist twist;
};

// `t vx vy vz wx wy wz`; std::nullopt for a malformed line.
std::optional<ReferenceSample> parse_reference_line(std::string_view line);

// Shortest decimal text with 9 significant digits.
std::string format_number(double value);

// Column names for 3 (x, y, z), 7 (x .. qk) or any other number of axes (a0, a1, ...).
std::vector<std::string> axis_names(std::size_t count);

// Header `t,<axis>_pos,<axis>_vel,<axis>_acc,<axis>_jerk,...`.
std::string csv_header(std::span<const std::string> names);

// One CSV row; states past an axis' end are extended with zero jerk.
std::string csv_row(double t, std::span<const AxisProfile> axes, bool unit_quaternion);

// Rows at t0 + k dt up to the last end time, plus that end time itself. With seven axes the
// quaternion positions are renormalized.
void write_trajectory_csv(std::ostream& out, std::span<const AxisProfile> axes, double dt);

}  // namespace softmotion
