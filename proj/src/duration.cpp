#include "softmotion/duration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "softmotion/general.hpp"
#include "softmotion/ptp.hpp"

namespace softmotion {

namespace {

constexpr double kInfeasibleTolerance = 1e-6;
constexpr int kSamplesPerBranch = 64;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Change {
    double time = 0.0;
    double distance = 0.0;
};

// Zero-acceleration to zero-acceleration velocity change. The acceleration pulse is
// symmetric, so the distance is the mean velocity times the duration.
Change velocity_change(double from, double to, const KinematicLimits& limits) {
    const double dv = std::abs(to - from);
    const double full = limits.amax * limits.amax / limits.jmax;
    const double time =
        dv >= full ? dv / limits.amax + limits.amax / limits.jmax : 2.0 * std::sqrt(dv / limits.jmax);
    return {time, 0.5 * (from + to) * time};
}

// Duration as a function of the cruise velocity vc.
class SlowingFamily {
   public:
    SlowingFamily(const TransitionProblem& problem, const KinematicLimits& limits)
        : v0_(problem.init.v), vf_(problem.final.v), d_(problem.displacement()), limits_(limits) {}

    // Distance left for the cruise.
    [[nodiscard]] double residual(double vc) const {
        return d_ - velocity_change(v0_, vc, limits_).distance -
               velocity_change(vc, vf_, limits_).distance;
    }

    // NaN where the cruise would run backwards; +inf towards vc = 0 with distance left.
    [[nodiscard]] double duration(double vc) const {
        const Change in = velocity_change(v0_, vc, limits_);
        const Change out = velocity_change(vc, vf_, limits_);
        const double rest = d_ - in.distance - out.distance;
        const double scale = 1e-12 * std::max(1.0, std::abs(d_));
        double cruise = 0.0;
        if (vc == 0.0) {
            if (std::abs(rest) > scale) return kInf;
            return std::numeric_limits<double>::quiet_NaN();
        }
        cruise = rest / vc;
        if (cruise < 0.0) {
            if (std::abs(rest) > scale) return std::numeric_limits<double>::quiet_NaN();
            cruise = 0.0;
        }
        return in.time + cruise + out.time;
    }

    // Cut points of the cruise-velocity range: saturation of the acceleration in either
    // change, vc = 0, and the zeros of the residual.
    [[nodiscard]] std::vector<double> breakpoints() const {
        const double vmax = limits_.vmax;
        const double full = limits_.amax * limits_.amax / limits_.jmax;
        std::vector<double> cuts{-vmax, vmax, 0.0, v0_, vf_, v0_ - full, v0_ + full, vf_ - full, vf_ + full};
        std::erase_if(cuts, [&](double v) { return v < -vmax || v > vmax; });
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

        std::vector<double> zeros;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            double prev_v = cuts[i];
            double prev_r = residual(prev_v);
            for (int k = 1; k <= kSamplesPerBranch; ++k) {
                const double v = cuts[i] + (cuts[i + 1] - cuts[i]) * k / kSamplesPerBranch;
                const double r = residual(v);
                if ((prev_r < 0.0) != (r < 0.0)) {
                    zeros.push_back(bisect([&](double x) { return residual(x) < 0.0; }, prev_v, v,
                                           prev_r < 0.0));
                }
                prev_v = v;
                prev_r = r;
            }
        }
        cuts.insert(cuts.end(), zeros.begin(), zeros.end());
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        return cuts;
    }

    // Boundary of a predicate known to be `lo_value` at lo and the opposite at hi.
    template <typename Pred>
    static double bisect(Pred pred, double lo, double hi, bool lo_value) {
        for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            (pred(mid) == lo_value ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }

   private:
    double v0_, vf_, d_;
    KinematicLimits limits_;
};

std::optional<double> solve_cruise_velocity(const SlowingFamily& family, double t_imp) {
    const std::vector<double> cuts = family.breakpoints();
    std::optional<double> best;
    double best_error = kInf;
    const auto consider = [&](double vc) {
        const double error = std::abs(family.duration(vc) - t_imp);
        if (!(error <= kInfeasibleTolerance)) return;
        // Of several solutions, keep the fastest cruise.
        if (!best || std::abs(vc) > std::abs(*best) + 1e-12 ||
            (std::abs(std::abs(vc) - std::abs(*best)) <= 1e-12 && error < best_error)) {
            best = vc;
            best_error = error;
        }
    };

    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i];
        const double hi = cuts[i + 1];
        if (std::isnan(family.duration(0.5 * (lo + hi)))) {
            continue;
        }
        double prev_v = lo;
        double prev_f = family.duration(lo) - t_imp;
        for (int k = 1; k <= kSamplesPerBranch; ++k) {
            const double v = lo + (hi - lo) * k / kSamplesPerBranch;
            const double f = family.duration(v) - t_imp;
            if (!std::isnan(f) && !std::isnan(prev_f)) {
                if (f == 0.0) {
                    consider(v);
                } else if ((prev_f < 0.0) != (f < 0.0)) {
                    const double root = SlowingFamily::bisect(
                        [&](double x) { return family.duration(x) - t_imp < 0.0; }, prev_v, v,
                        prev_f < 0.0);
                    consider(root);
                }
            }
            prev_v = v;
            prev_f = f;
        }
    }
    return best;
}

void append(std::vector<Phase>& phases, const AxisProfile& profile) {
    const auto more = profile.phases();
    phases.insert(phases.end(), more.begin(), more.end());
}

}  // namespace

TransitionProblem make_transition(const KinematicState& init, const KinematicState& final,
                                  const KinematicLimits& limits) {
    limits.validate();
    if (init.a != 0.0 || final.a != 0.0) {
        throw std::invalid_argument("transition boundary accelerations must be zero");
    }
    TransitionProblem problem{init, final};
    problem.t_opt = plan_min_time_1d(init, final, limits).duration();
    problem.t_stop = stop_time(problem, limits).time;
    problem.t_imp = problem.t_opt;
    return problem;
}

StopPlan stop_time(const TransitionProblem& problem, const KinematicLimits& limits,
                   std::optional<double> t_imp, double t0) {
    limits.validate();
    const KinematicState& init = problem.init;
    const KinematicState rest{0.0, 0.0, 0.0};
    const KinematicState target{0.0, problem.final.v, 0.0};

    const AxisProfile brake = direct_connection({0.0, init.v, 0.0}, rest, limits);
    const AxisProfile launch = direct_connection(rest, target, limits);
    double middle = problem.displacement() - brake.end_state().x - launch.end_state().x;
    // Rounding residue would otherwise cost a cube-root-sized detour.
    if (std::abs(middle) <= 1e-12 * std::max(1.0, std::abs(problem.displacement()))) {
        middle = 0.0;
    }
    const AxisProfile reposition = plan_ptp_1d(middle, limits);

    StopPlan plan;
    plan.time = brake.duration() + reposition.duration() + launch.duration();

    std::vector<Phase> phases;
    append(phases, brake);
    if (t_imp && *t_imp > plan.time) {
        phases.push_back({*t_imp - plan.time, 0.0});
    }
    append(phases, reposition);
    append(phases, launch);
    plan.profile = AxisProfile(init, phases, t0);
    return plan;
}

std::optional<AxisProfile> plan_slowing_velocity(const TransitionProblem& problem, double t_imp,
                                                 const KinematicLimits& limits, double t0) {
    limits.validate();
    if (!(t_imp >= problem.t_opt - kInfeasibleTolerance)) {
        return std::nullopt;
    }
    if (std::abs(t_imp - problem.t_opt) <= 1e-9) {
        return plan_min_time_1d(problem.init, problem.final, limits, t0);
    }

    const SlowingFamily family(problem, limits);
    const std::optional<double> vc = solve_cruise_velocity(family, t_imp);
    if (!vc) {
        return std::nullopt;
    }

    const KinematicState cruise{0.0, *vc, 0.0};
    const AxisProfile in = direct_connection({0.0, problem.init.v, 0.0}, cruise, limits);
    const AxisProfile out = direct_connection(cruise, {0.0, problem.final.v, 0.0}, limits);
    std::vector<Phase> phases;
    append(phases, in);
    phases.push_back({std::max(family.residual(*vc) / *vc, 0.0), 0.0});
    append(phases, out);
    return AxisProfile(problem.init, phases, t0);
}

std::optional<AxisProfile> plan_with_duration(const TransitionProblem& problem, double t_imp,
                                              const KinematicLimits& limits, double t0) {
    if (auto slowed = plan_slowing_velocity(problem, t_imp, limits, t0)) {
        return slowed;
    }
    if (t_imp >= problem.t_stop) {
        return stop_time(problem, limits, t_imp, t0).profile;
    }
    return std::nullopt;
}

std::vector<TimeInterval> feasibility_intervals(const TransitionProblem& problem,
                                                const KinematicLimits& limits, double resolution) {
    if (!(resolution > 0.0)) {
        throw std::invalid_argument("feasibility_intervals: resolution must be positive");
    }
    const auto feasible = [&](double t) {
        return t >= problem.t_stop || plan_slowing_velocity(problem, t, limits).has_value();
    };
    const auto refine = [&](double lo, double hi, bool lo_feasible) {
        while (hi - lo > kInfeasibleTolerance) {
            const double mid = 0.5 * (lo + hi);
            (feasible(mid) == lo_feasible ? lo : hi) = mid;
        }
        return lo_feasible ? lo : hi;
    };

    std::vector<TimeInterval> intervals;
    double start = problem.t_opt;
    double prev_t = problem.t_opt;
    bool prev_ok = true;
    for (int k = 1;; ++k) {
        const double t = std::min(problem.t_opt + k * resolution, problem.t_stop);
        if (t <= prev_t) break;
        const bool ok = feasible(t);
        if (ok && !prev_ok) {
            start = refine(prev_t, t, false);
        } else if (!ok && prev_ok) {
            intervals.push_back({start, refine(prev_t, t, true)});
        }
        prev_t = t;
        prev_ok = ok;
    }
    intervals.push_back({start, kInf});
    return intervals;
}

CommonTime impose_common_time(std::span<const TransitionProblem> problems,
                              std::span<const KinematicLimits> limits, double t0) {
    if (problems.empty()) {
        throw std::invalid_argument("impose_common_time: no axes");
    }
    if (limits.size() != 1 && limits.size() != problems.size()) {
        throw std::invalid_argument("impose_common_time: one limits entry per axis expected");
    }
    const auto limits_of = [&](std::size_t i) -> const KinematicLimits& {
        return limits.size() == 1 ? limits[0] : limits[i];
    };

    double floor = 0.0;
    double ceiling = 0.0;
    std::vector<std::vector<TimeInterval>> per_axis;
    for (std::size_t i = 0; i < problems.size(); ++i) {
        floor = std::max(floor, problems[i].t_opt);
        ceiling = std::max(ceiling, problems[i].t_stop);
        per_axis.push_back(feasibility_intervals(problems[i], limits_of(i)));
    }

    std::vector<double> candidates{floor};
    for (const auto& intervals : per_axis) {
        for (const auto& interval : intervals) {
            if (interval.lo > floor && interval.lo < ceiling) candidates.push_back(interval.lo);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.push_back(ceiling);

    for (double t : candidates) {
        const bool shared = std::all_of(per_axis.begin(), per_axis.end(), [&](const auto& intervals) {
            return std::any_of(intervals.begin(), intervals.end(),
                               [&](const TimeInterval& iv) { return iv.contains(t); });
        });
        if (!shared && t != ceiling) continue;

        CommonTime out{t, {}};
        for (std::size_t i = 0; i < problems.size(); ++i) {
            auto profile = plan_with_duration(problems[i], t, limits_of(i), t0);
            if (!profile) break;
            out.profiles.push_back(std::move(*profile));
        }
        if (out.profiles.size() == problems.size()) {
            return out;
        }
    }
    throw std::logic_error("impose_common_time: stop time rejected");
}

}  // namespace softmotion
