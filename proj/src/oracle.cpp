#include "softmotion/oracle.hpp"

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/multi_point.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

namespace softmotion {

namespace {

namespace bg = boost::geometry;
using Point = bg::model::d2::point_xy<double>;  // (v, x)
using Points = std::vector<Point>;

// States sharing one acceleration value. Jerk actions act affinely on (v, x) and every
// constraint is an interval on v, so mixing two states of a set gives a state reachable with
// jerks inside the bound; the set is kept as the convex hull of its points.
struct Slice {
    double a = 0.0;
    Points hull;
};

// Acceleration values repeat exactly on a few lattices; nearby keys are the same value.
long long slice_key(double a) { return std::llround(a * 1e10); }

Points convex_hull(const Points& points) {
    if (points.size() <= 2) return points;
    bg::model::multi_point<Point> cloud(points.begin(), points.end());
    bg::model::polygon<Point> hull;
    bg::convex_hull(cloud, hull);
    Points out(hull.outer().begin(), hull.outer().end());
    if (out.size() > 1) out.pop_back();  // closing point
    return out;
}

// Drops hull vertices lying within `tol` of the chord joining their neighbours. The hull only
// shrinks, so reachability is never overstated.
Points thin(Points hull, double tol) {
    std::size_t i = 0;
    while (hull.size() > 3 && i < hull.size()) {
        const Point& p = hull[(i + hull.size() - 1) % hull.size()];
        const Point& q = hull[i];
        const Point& r = hull[(i + 1) % hull.size()];
        const double ex = r.x() - p.x(), ey = r.y() - p.y();
        const double cross = std::abs(ex * (q.y() - p.y()) - ey * (q.x() - p.x()));
        if (cross <= tol * std::hypot(ex, ey)) {
            hull.erase(hull.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    return hull;
}

// Part of the convex polygon `poly` where c0 + cv v + cx x >= 0 (Sutherland-Hodgman).
Points clip(const Points& poly, double c0, double cv, double cx) {
    const auto side = [&](const Point& p) { return c0 + cv * p.x() + cx * p.y(); };
    if (poly.size() == 1) {
        return side(poly[0]) >= 0.0 ? poly : Points{};
    }
    Points out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point& p = poly[i];
        const Point& q = poly[(i + 1) % poly.size()];
        const double sp = side(p);
        const double sq = side(q);
        if (sp >= 0.0) out.push_back(p);
        if ((sp < 0.0) != (sq < 0.0)) {
            const double t = sp / (sp - sq);
            out.emplace_back(p.x() + t * (q.x() - p.x()), p.y() + t * (q.y() - p.y()));
        }
    }
    return out;
}

Points clip_v(const Points& poly, double lo, double hi) {
    if (lo > hi) return {};
    return clip(clip(poly, -lo, 1.0, 0.0), hi, -1.0, 0.0);
}

using Vec = std::array<double, 3>;
using Mat = std::array<Vec, 3>;

Mat inverse(const Mat& m) {
    const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    Mat inv{};
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            const std::size_t r1 = (c + 1) % 3, r2 = (c + 2) % 3;
            const std::size_t c1 = (r + 1) % 3, c2 = (r + 2) % 3;
            inv[r][c] = (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) / det;
        }
    }
    return inv;
}

// Closing move: three steps of free jerk in [-jmax, jmax] landing exactly on the final state.
// The jerks are affine in the state the move starts from.
class Completion {
   public:
    Completion(const KinematicState& final, const KinematicLimits& limits, double dt)
        : final_(final), limits_(limits), dt_(dt) {
        Mat effect{};
        for (std::size_t step = 0; step < 3; ++step) {
            Vec jerks{};
            jerks[step] = 1.0;
            const KinematicState end = run({}, jerks);
            effect[0][step] = end.a;
            effect[1][step] = end.v;
            effect[2][step] = end.x;
        }
        solve_ = inverse(effect);
    }

    // True if a state of the set completes within the limits.
    [[nodiscard]] bool reaches(const Slice& slice) const {
        // Jerks as c + cv v + cx x at this acceleration.
        const Vec base = jerks_from({slice.a, 0.0, 0.0});
        const Vec dv = jerks_from({slice.a, 1.0, 0.0});
        const Vec dx = jerks_from({slice.a, 0.0, 1.0});
        const double bound = limits_.jmax * (1.0 + 1e-12);
        Points region = slice.hull;
        for (std::size_t i = 0; i < 3 && !region.empty(); ++i) {
            const double cv = dv[i] - base[i];
            const double cx = dx[i] - base[i];
            region = clip(region, bound - base[i], -cv, -cx);
            region = clip(region, bound + base[i], cv, cx);
        }
        if (region.empty()) return false;

        Point mean(0.0, 0.0);
        for (const auto& p : region) {
            mean.x(mean.x() + p.x() / static_cast<double>(region.size()));
            mean.y(mean.y() + p.y() / static_cast<double>(region.size()));
        }
        region.push_back(mean);
        return std::any_of(region.rbegin(), region.rend(), [&](const Point& p) {
            const KinematicState s{slice.a, p.x(), p.y()};
            return within_limits(s, jerks_from(s));
        });
    }

   private:
    [[nodiscard]] KinematicState run(KinematicState s, const Vec& jerks) const {
        for (double j : jerks) s = integrate_segment(s, j, dt_);
        return s;
    }

    [[nodiscard]] Vec jerks_from(const KinematicState& s) const {
        const KinematicState drift = run(s, {0.0, 0.0, 0.0});
        const Vec miss{final_.a - drift.a, final_.v - drift.v, final_.x - drift.x};
        Vec out{};
        for (std::size_t r = 0; r < 3; ++r) {
            out[r] = solve_[r][0] * miss[0] + solve_[r][1] * miss[1] + solve_[r][2] * miss[2];
        }
        return out;
    }

    [[nodiscard]] bool within_limits(KinematicState s, const Vec& jerks) const {
        const double slack = 1e-9;
        for (double j : jerks) {
            if (std::abs(j) > limits_.jmax * (1.0 + 1e-9)) return false;
            const KinematicState next = integrate_segment(s, j, dt_);
            if (std::abs(next.a) > limits_.amax + slack || std::abs(next.v) > limits_.vmax + slack) {
                return false;
            }
            if (j != 0.0 && s.a * next.a < 0.0) {
                const double peak = s.v - s.a * s.a / (2.0 * j);
                if (std::abs(peak) > limits_.vmax + slack) return false;
            }
            s = next;
        }
        return true;
    }

    KinematicState final_;
    KinematicLimits limits_;
    double dt_;
    Mat solve_{};
};

// One step of constant jerk from acceleration `a`; when the acceleration bound would be
// crossed the jerk acts only until the bound and the acceleration is then held.
struct Action {
    double a_next = 0.0;
    double dv = 0.0;      // v' = v + dv
    double dx = 0.0;      // x' = x + v dt + dx
    double v_lo = 0.0;    // admissible start velocities
    double v_hi = 0.0;
};

Action make_action(double a, double jerk, const KinematicLimits& limits, double dt) {
    const double amax = limits.amax;
    const double vmax = limits.vmax;
    double ramp = dt;
    if (jerk != 0.0 && std::abs(a + jerk * dt) > amax) {
        ramp = std::clamp((std::copysign(amax, jerk) - a) / jerk, 0.0, dt);
    }
    const KinematicState mid = integrate_segment({a, 0.0, 0.0}, jerk, ramp);
    const KinematicState end = integrate_segment(mid, 0.0, dt - ramp);

    Action act;
    act.a_next = ramp < dt ? std::copysign(amax, jerk) : end.a;
    act.dv = end.v;
    act.dx = end.x;
    act.v_lo = -vmax - act.dv;
    act.v_hi = vmax - act.dv;
    // Velocity extremum inside the ramp.
    if (jerk != 0.0 && a * mid.a < 0.0) {
        const double peak = -a * a / (2.0 * jerk);
        act.v_lo = std::max(act.v_lo, -vmax - peak);
        act.v_hi = std::min(act.v_hi, vmax - peak);
    }
    return act;
}

}  // namespace

OracleResult brute_force_min_time(const KinematicState& init, const KinematicState& final,
                                  const KinematicLimits& limits, double dt,
                                  const OracleOptions& options) {
    limits.validate();
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw std::invalid_argument("brute_force_min_time: dt must be positive");
    }
    const auto& [jmax, amax, vmax] = limits;
    const double slack = 1e-12;
    const auto inside = [&](const KinematicState& s) {
        return std::abs(s.a) <= amax + slack && std::abs(s.v) <= vmax + slack;
    };
    if (!inside(init) || !inside(final)) {
        throw std::invalid_argument("brute_force_min_time: boundary state outside the limits");
    }

    OracleResult result;
    const double scale = std::max(1.0, std::abs(final.x - init.x));
    if (std::abs(init.a - final.a) <= 1e-12 && std::abs(init.v - final.v) <= 1e-12 &&
        std::abs(init.x - final.x) <= 1e-12 * scale) {
        result.status = OracleResult::Status::Found;
        return result;
    }

    const Completion completion(final, limits, dt);
    std::map<long long, Slice> slices{{slice_key(init.a), {init.a, {Point(init.v, init.x)}}}};
    if (completion.reaches(slices.begin()->second)) {
        result.status = OracleResult::Status::Found;
        result.time = 3.0 * dt;
        return result;
    }

    const double max_level = std::ceil(options.horizon / dt);
    const double thin_tol = 1e-3 * vmax * dt;
    const double jerks[] = {-jmax, 0.0, jmax};
    std::map<long long, std::pair<double, Points>> next;
    for (long level = 1; !slices.empty(); ++level) {
        if (static_cast<double>(level) > max_level) {
            result.status = OracleResult::Status::BudgetExceeded;
            return result;
        }
        next.clear();
        for (const auto& [key, slice] : slices) {
            for (double jerk : jerks) {
                const Action act = make_action(slice.a, jerk, limits, dt);
                const Points kept = clip_v(slice.hull, act.v_lo, act.v_hi);
                if (kept.empty()) continue;
                auto& [a_next, points] = next[slice_key(act.a_next)];
                a_next = act.a_next;
                for (const auto& p : kept) {
                    points.emplace_back(p.x() + act.dv, p.y() + p.x() * dt + act.dx);
                }
                result.expanded += kept.size();
            }
        }
        if (result.expanded > options.node_cap) {
            result.status = OracleResult::Status::BudgetExceeded;
            return result;
        }

        slices.clear();
        for (auto& [key, entry] : next) {
            Slice slice{entry.first, thin(convex_hull(entry.second), thin_tol)};
            if (completion.reaches(slice)) {
                result.status = OracleResult::Status::Found;
                result.time = static_cast<double>(level + 3) * dt;
                return result;
            }
            slices.emplace(key, std::move(slice));
        }
    }
    result.status = OracleResult::Status::Infeasible;
    return result;
}

}  // namespace softmotion
