#include "softmotion/io.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace softmotion {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::string_view strip_comment(std::string_view s) { return s.substr(0, s.find('#')); }

std::optional<double> to_number(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || end != text.data() + text.size() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

KinematicState extended(const AxisProfile& axis, double t) {
    if (t >= axis.end_time()) {
        return integrate_segment(axis.end_state(), 0.0, t - axis.end_time());
    }
    return axis.evaluate(std::max(t, axis.t0())).state;
}

double jerk_at(const AxisProfile& axis, double t) {
    if (t >= axis.end_time() || t < axis.t0()) return 0.0;
    return axis.evaluate(t).jerk;
}

}  // namespace

LimitsConfig parse_limits(std::istream& in) {
    LimitsConfig config;
    const std::map<std::string, double*, std::less<>> slots{
        {"linear.jmax", &config.linear.jmax},   {"linear.amax", &config.linear.amax},
        {"linear.vmax", &config.linear.vmax},   {"angular.jmax", &config.angular.jmax},
        {"angular.amax", &config.angular.amax}, {"angular.vmax", &config.angular.vmax},
    };
    std::string raw;
    for (int line_no = 1; std::getline(in, raw); ++line_no) {
        const std::string_view line = trim(strip_comment(raw));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw InputError(fmt::format("limits line {}: expected key = value", line_no));
        }
        const std::string_view key = trim(line.substr(0, eq));
        const auto slot = slots.find(key);
        if (slot == slots.end()) {
            throw InputError(fmt::format("limits line {}: unknown key '{}'", line_no, key));
        }
        const auto value = to_number(line.substr(eq + 1));
        if (!value) {
            throw InputError(fmt::format("limits line {}: bad number", line_no));
        }
        *slot->second = *value;
    }
    try {
        config.linear.validate();
        config.angular.validate();
    } catch (const std::invalid_argument& e) {
        throw InputError(fmt::format("limits: {}", e.what()));
    }
    return config;
}

LimitsConfig load_limits(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError(fmt::format("cannot open limits file '{}'", path));
    }
    return parse_limits(in);
}

std::vector<double> parse_vector(std::string_view text) {
    std::vector<double> out;
    while (true) {
        const auto comma = text.find(',');
        const auto value = to_number(text.substr(0, comma));
        if (!value) {
            throw InputError(fmt::format("malformed number list '{}'", text));
        }
        out.push_back(*value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

std::vector<std::vector<double>> parse_waypoints(std::istream& in) {
    std::vector<std::vector<double>> points;
    std::string raw;
    for (int line_no = 1; std::getline(in, raw); ++line_no) {
        const std::string_view line = trim(strip_comment(raw));
        if (line.empty()) continue;
        std::vector<double> p;
        try {
            p = parse_vector(line);
        } catch (const InputError&) {
            throw InputError(fmt::format("waypoint line {}: malformed", line_no));
        }
        if (p.size() != 3 && p.size() != 7) {
            throw InputError(fmt::format("waypoint line {}: expected 3 or 7 values", line_no));
        }
        if (!points.empty() && p.size() != points.front().size()) {
            throw InputError(fmt::format("waypoint line {}: dimension changes", line_no));
        }
        points.push_back(std::move(p));
    }
    return points;
}

std::optional<ReferenceSample> parse_reference_line(std::string_view line) {
    std::array<double, 7> values{};
    std::size_t count = 0;
    line = trim(line);
    while (!line.empty()) {
        const auto end = line.find_first_of(" \t");
        const auto value = to_number(line.substr(0, end));
        if (!value || count == values.size()) return std::nullopt;
        values[count++] = *value;
        if (end == std::string_view::npos) break;
        line = trim(line.substr(end));
    }
    if (count != values.size()) return std::nullopt;
    return ReferenceSample{values[0], {{values[1], values[2], values[3]}, {values[4], values[5], values[6]}}};
}

std::string format_number(double value) {
    if (value == 0.0) value = 0.0;  // no "-0"
    return fmt::format("{:.9g}", value);
}

std::vector<std::string> axis_names(std::size_t count) {
    if (count == 3) return {"x", "y", "z"};
    if (count == 7) return {"x", "y", "z", "qn", "qi", "qj", "qk"};
    std::vector<std::string> names;
    for (std::size_t i = 0; i < count; ++i) names.push_back(fmt::format("a{}", i));
    return names;
}

std::string csv_header(std::span<const std::string> names) {
    std::string header = "t";
    for (const auto& name : names) {
        header += fmt::format(",{0}_pos,{0}_vel,{0}_acc,{0}_jerk", name);
    }
    return header;
}

std::string csv_row(double t, std::span<const AxisProfile> axes, bool unit_quaternion) {
    std::vector<KinematicState> states;
    for (const auto& axis : axes) states.push_back(extended(axis, t));
    if (unit_quaternion && states.size() == 7) {
        const Quaternion q = Quaternion{states[3].x, states[4].x, states[5].x, states[6].x}.normalized();
        states[3].x = q.n;
        states[4].x = q.i;
        states[5].x = q.j;
        states[6].x = q.k;
    }
    std::string row = format_number(t);
    for (std::size_t i = 0; i < axes.size(); ++i) {
        row += ',' + format_number(states[i].x);
        row += ',' + format_number(states[i].v);
        row += ',' + format_number(states[i].a);
        row += ',' + format_number(jerk_at(axes[i], t));
    }
    return row;
}

void write_trajectory_csv(std::ostream& out, std::span<const AxisProfile> axes, double dt) {
    if (!(dt > 0.0)) {
        throw InputError("sampling period must be positive");
    }
    double t0 = 0.0;
    double end = 0.0;
    if (!axes.empty()) {
        t0 = axes.front().t0();
        end = t0;
        for (const auto& axis : axes) {
            t0 = std::min(t0, axis.t0());
            end = std::max(end, axis.end_time());
        }
    }
    const bool pose = axes.size() == 7;
    out << csv_header(axis_names(axes.size())) << '\n';
    // Grid points closer than this to the end are replaced by the end itself.
    const double eps = 1e-9 * dt;
    for (long k = 0;; ++k) {
        const double t = t0 + static_cast<double>(k) * dt;
        if (t >= end - eps) break;
        out << csv_row(t, axes, pose) << '\n';
    }
    out << csv_row(end, axes, pose) << '\n';
}

}  // namespace softmotion
