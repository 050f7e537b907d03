#include "softmotion/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include "softmotion/general.hpp"
#include "softmotion/io.hpp"
#include "softmotion/oracle.hpp"
#include "softmotion/orientation.hpp"
#include "softmotion/path.hpp"
#include "softmotion/sync.hpp"
#include "softmotion/tracker.hpp"

namespace softmotion {

namespace {

struct Infeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

LimitsConfig limits_from(const std::string& path) {
    return path.empty() ? LimitsConfig{} : load_limits(path);
}

// Writes through `out` for "-" or an empty path, else to the named file.
template <typename Fn>
void with_output(const std::string& path, std::ostream& out, Fn&& fn) {
    if (path.empty() || path == "-") {
        fn(out);
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw InputError(fmt::format("cannot write '{}'", path));
    }
    fn(file);
}

Pose pose_from(const std::vector<double>& c) {
    Pose pose{{c[0], c[1], c[2]}, Quaternion{c[3], c[4], c[5], c[6]}};
    if (std::abs(pose.orient.norm() - 1.0) > 1e-3) {
        throw InputError("orientation quaternion is not unit-norm");
    }
    return pose;
}

struct PtpArgs {
    std::string from, to, limits, out;
    double dt = kDefaultTick;
};

void plan_ptp(const PtpArgs& args, std::ostream& out) {
    const LimitsConfig limits = limits_from(args.limits);
    const std::vector<double> from = parse_vector(args.from);
    const std::vector<double> to = parse_vector(args.to);
    if (from.size() != to.size() || (from.size() != 3 && from.size() != 7)) {
        throw InputError("--from and --to need 3 or 7 matching coordinates");
    }
    std::vector<AxisProfile> axes;
    if (from.size() == 3) {
        axes = plan_line(from, to, std::span(&limits.linear, 1));
    } else {
        axes = plan_pose_axes(pose_from(from), pose_from(to), limits.linear, limits.angular);
    }
    with_output(args.out, out, [&](std::ostream& os) { write_trajectory_csv(os, axes, args.dt); });
}

struct PathArgs {
    std::string waypoints, limits, out, report;
    double dt = kDefaultTick;
};

void write_report(std::ostream& os, const PathPlan& plan) {
    const auto names = axis_names(plan.axes.size());
    os << "transition,axis,t_start,v_init,v_final,displacement,t_opt,t_stop,t_imp\n";
    for (std::size_t k = 0; k < plan.transitions.size(); ++k) {
        const auto& tr = plan.transitions[k];
        for (std::size_t i = 0; i < tr.axes.size(); ++i) {
            const auto& p = tr.axes[i];
            os << fmt::format("{},{},{},{},{},{},{},{},{}\n", k + 1, names[i],
                              format_number(tr.start_time), format_number(p.init.v),
                              format_number(p.final.v), format_number(p.displacement()),
                              format_number(p.t_opt), format_number(p.t_stop),
                              format_number(tr.t_imp));
        }
    }
}

void plan_path(const PathArgs& args, std::ostream& out) {
    const LimitsConfig limits = limits_from(args.limits);
    std::ifstream file(args.waypoints);
    if (!file) {
        throw InputError(fmt::format("cannot open waypoint file '{}'", args.waypoints));
    }
    std::vector<std::vector<double>> points = parse_waypoints(file);
    if (points.size() < 3) {
        throw InputError("at least three points are required");
    }
    std::vector<KinematicLimits> axis_limits{limits.linear};
    if (points.front().size() == 7) {
        const auto pose = pose_axis_limits(limits.linear, limits.angular);
        axis_limits.assign(pose.begin(), pose.end());
        for (std::size_t k = 0; k < points.size(); ++k) {
            (void)pose_from(points[k]);
            // Keep consecutive orientations in one hemisphere.
            if (k > 0) {
                double dot = 0.0;
                for (std::size_t c = 3; c < 7; ++c) dot += points[k][c] * points[k - 1][c];
                if (dot < 0.0) {
                    for (std::size_t c = 3; c < 7; ++c) points[k][c] = -points[k][c];
                }
            }
        }
    }
    const PathPlan plan = plan_waypoint_path(points, axis_limits);
    with_output(args.out, out, [&](std::ostream& os) { write_trajectory_csv(os, plan.axes, args.dt); });
    if (!args.report.empty()) {
        with_output(args.report, out, [&](std::ostream& os) { write_report(os, plan); });
    }
}

struct TrackArgs {
    std::string limits;
    double tick = kDefaultTick;
};

void track(const TrackArgs& args, std::istream& in, std::ostream& out, std::ostream& err) {
    const LimitsConfig limits = limits_from(args.limits);
    std::vector<ReferenceSample> references;
    std::string line;
    for (int line_no = 1; std::getline(in, line); ++line_no) {
        const auto sample = parse_reference_line(line);
        if (!sample || (!references.empty() && sample->t < references.back().t)) {
            err << fmt::format("warning: reference line {} ignored\n", line_no);
            continue;
        }
        references.push_back(*sample);
    }
    if (references.empty()) {
        return;
    }

    PoseTracker tracker(limits.linear, limits.angular, {}, args.tick);
    const auto row = [&] {
        const auto& axes = tracker.axes();
        const auto coords = to_coordinates(tracker.pose());
        std::string text = format_number(axes.time());
        for (std::size_t i = 0; i < 7; ++i) {
            const auto& s = axes.state()[i];
            text += fmt::format(",{},{},{},{}", format_number(coords[i]), format_number(s.v),
                                format_number(s.a), format_number(axes.jerk()[i]));
        }
        return text;
    };

    out << csv_header(axis_names(7)) << '\n' << row() << '\n';
    const double last = references.back().t;
    std::size_t next = 0;
    Twist held;  // zero until the first reference applies
    for (long k = 0;; ++k) {
        const double now = static_cast<double>(k) * args.tick;
        if (now >= last - 1e-9 * args.tick) break;
        while (next < references.size() && references[next].t <= now + 1e-9 * args.tick) {
            held = references[next++].twist;
        }
        tracker.tick(held);
        out << row() << '\n';
    }
}

struct OracleArgs {
    std::string init, final, limits, axis = "linear";
    double displacement = 0.0;
    double dt = 0.002;
    std::size_t node_cap = OracleOptions{}.node_cap;
};

void oracle(const OracleArgs& args, std::ostream& out) {
    const LimitsConfig config = limits_from(args.limits);
    const KinematicLimits& limits = args.axis == "angular" ? config.angular : config.linear;
    const auto init = parse_vector(args.init);
    const auto final = parse_vector(args.final);
    if (init.size() != 2 || final.size() != 2) {
        throw InputError("--init and --final take a,v");
    }
    if (!(args.dt > 0.0)) {
        throw InputError("--dt must be positive");
    }
    const KinematicState s0{init[0], init[1], 0.0};
    const KinematicState sf{final[0], final[1], args.displacement};
    if (!is_admissible_start(s0, limits) || !is_admissible_end(sf, limits)) {
        throw InputError("boundary state outside the limits");
    }
    const OracleResult result = brute_force_min_time(s0, sf, limits, args.dt, {args.node_cap});
    switch (result.status) {
        case OracleResult::Status::Found:
            out << format_number(result.time) << '\n';
            return;
        case OracleResult::Status::Infeasible:
            throw Infeasible("no jerk sequence reaches the final state");
        case OracleResult::Status::BudgetExceeded:
            throw Infeasible(fmt::format("search budget exceeded after {} expansions", result.expanded));
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Jerk-limited trajectory planning"};
    app.name("softmotion");
    app.require_subcommand(1);

    PtpArgs ptp;
    auto* ptp_cmd = app.add_subcommand("plan-ptp", "synchronized point-to-point motion");
    ptp_cmd->add_option("--from", ptp.from, "x,y,z[,qn,qi,qj,qk]")->required();
    ptp_cmd->add_option("--to", ptp.to, "x,y,z[,qn,qi,qj,qk]")->required();
    ptp_cmd->add_option("--limits", ptp.limits, "limits file");
    ptp_cmd->add_option("--dt", ptp.dt, "sampling period (s)");
    ptp_cmd->add_option("--out", ptp.out, "CSV output (default stdout)");

    PathArgs path;
    auto* path_cmd = app.add_subcommand("plan-path", "waypoint path with smooth transitions");
    path_cmd->add_option("--waypoints", path.waypoints, "waypoint file")->required();
    path_cmd->add_option("--limits", path.limits, "limits file");
    path_cmd->add_option("--dt", path.dt, "sampling period (s)");
    path_cmd->add_option("--out", path.out, "CSV output (default stdout)");
    path_cmd->add_option("--report", path.report, "transition report CSV");

    TrackArgs tracking;
    auto* track_cmd = app.add_subcommand("track", "follow a velocity reference read from stdin");
    track_cmd->add_option("--limits", tracking.limits, "limits file");
    track_cmd->add_option("--tick", tracking.tick, "tick period (s)");

    OracleArgs search;
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force minimal time of a 1-D problem");
    oracle_cmd->add_option("--init", search.init, "a,v")->required();
    oracle_cmd->add_option("--final", search.final, "a,v")->required();
    oracle_cmd->add_option("--displacement", search.displacement, "final minus initial position")
        ->required();
    oracle_cmd->add_option("--limits", search.limits, "limits file");
    oracle_cmd->add_option("--axis", search.axis, "linear or angular limits")
        ->check(CLI::IsMember({"linear", "angular"}));
    oracle_cmd->add_option("--dt", search.dt, "jerk step (s)");
    oracle_cmd->add_option("--node-cap", search.node_cap, "expansion budget");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (ptp_cmd->parsed()) {
            if (!(ptp.dt > 0.0)) throw InputError("--dt must be positive");
            plan_ptp(ptp, out);
        } else if (path_cmd->parsed()) {
            if (!(path.dt > 0.0)) throw InputError("--dt must be positive");
            plan_path(path, out);
        } else if (track_cmd->parsed()) {
            if (!(tracking.tick > 0.0)) throw InputError("--tick must be positive");
            track(tracking, in, out, err);
        } else if (oracle_cmd->parsed()) {
            oracle(search, out);
        }
    } catch (const Infeasible& e) {
        err << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        // InputError and file problems.
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace softmotion
