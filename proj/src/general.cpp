#include "softmotion/general.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "softmotion/polynomial.hpp"

namespace softmotion {

namespace {

// Relative slack on the admissibility checks of boundary states.
constexpr double kAdmissibleSlack = 1e-9;
// Candidate acceptance in normalized units (jmax = amax = 1).
constexpr double kCandidateTolerance = 1e-9;
constexpr double kNegativeDurationTolerance = 1e-9;

struct VelocityChange {
    std::array<Phase, 3> phases;
    double time = 0.0;
};

// Rising-then-falling acceleration ([+J, 0, -J]) connection of (a0, v0) to (af, vf).
std::optional<VelocityChange> up_down(double a0, double v0, double af, double vf, double jmax,
                                      double amax) {
    const double slack = 1e-12 * amax;
    const double radicand = jmax * (vf - v0) + 0.5 * (a0 * a0 + af * af);
    if (radicand < -slack * amax) {
        return std::nullopt;
    }
    double peak = std::sqrt(std::max(radicand, 0.0));
    if (peak < a0 - slack || peak < af - slack) {
        return std::nullopt;
    }
    double plateau = 0.0;
    if (peak > amax) {
        peak = amax;
        plateau = (vf - v0 - (2.0 * amax * amax - a0 * a0 - af * af) / (2.0 * jmax)) / amax;
    }
    VelocityChange out;
    out.phases = {{
        {std::max((peak - a0) / jmax, 0.0), jmax},
        {std::max(plateau, 0.0), 0.0},
        {std::max((peak - af) / jmax, 0.0), -jmax},
    }};
    out.time = out.phases[0].duration + out.phases[1].duration + out.phases[2].duration;
    return out;
}

VelocityChange velocity_change(double a0, double v0, double af, double vf, double jmax,
                               double amax) {
    auto rising = up_down(a0, v0, af, vf, jmax, amax);
    auto falling = up_down(-a0, -v0, -af, -vf, jmax, amax);
    if (falling) {
        for (auto& phase : falling->phases) phase.jerk = -phase.jerk;
    }
    if (rising && (!falling || rising->time <= falling->time)) {
        return *rising;
    }
    if (falling) {
        return *falling;
    }
    // One of the two shapes always exists for finite inputs.
    throw std::logic_error("velocity_change: no connecting profile");
}

KinematicState run(const KinematicState& start, const std::vector<Phase>& phases) {
    KinematicState state = start;
    for (const auto& phase : phases) {
        state = integrate_segment(state, phase.jerk, phase.duration);
    }
    return state;
}

// Element of Q[u][r] / (r^2 - R(u)): even(u) + r * odd(u).
struct Ext {
    Polynomial even;
    Polynomial odd;
};

Ext constant(double value) { return {Polynomial::constant(value), Polynomial{}}; }

class ExtRing {
   public:
    explicit ExtRing(Polynomial radicand) : radicand_(std::move(radicand)) {}

    [[nodiscard]] const Polynomial& radicand() const { return radicand_; }

    [[nodiscard]] Ext add(const Ext& x, const Ext& y) const { return {x.even + y.even, x.odd + y.odd}; }
    [[nodiscard]] Ext sub(const Ext& x, const Ext& y) const { return {x.even - y.even, x.odd - y.odd}; }
    [[nodiscard]] Ext scale(double s, const Ext& x) const { return {s * x.even, s * x.odd}; }
    [[nodiscard]] Ext mul(const Ext& x, const Ext& y) const {
        return {x.even * y.even + radicand_ * (x.odd * y.odd), x.even * y.odd + x.odd * y.even};
    }

   private:
    Polynomial radicand_;
};

struct Endpoints {
    double a0, v0, af, vf, displacement, vmax;
};

// Displacement of [+J to a1, hold a1 for p, -J to a2, hold a2 for q, +J to af] with unit jerk,
// expressed symbolically in the template's unknown.
Ext travel(const ExtRing& ring, const Endpoints& e, const Ext& a1, const Ext& a2, const Ext& p,
           const Ext& q) {
    const Ext a0 = constant(e.a0);
    const Ext af = constant(e.af);
    const auto add = [&](const Ext& x, const Ext& y) { return ring.add(x, y); };
    const auto sub = [&](const Ext& x, const Ext& y) { return ring.sub(x, y); };
    const auto mul = [&](const Ext& x, const Ext& y) { return ring.mul(x, y); };
    const auto scale = [&](double s, const Ext& x) { return ring.scale(s, x); };

    Ext v = constant(e.v0);
    Ext x = constant(0.0);

    Ext d = sub(a1, a0);
    x = add(x, add(mul(v, d), scale(1.0 / 6.0, mul(mul(d, d), add(a1, scale(2.0, a0))))));
    v = add(v, scale(0.5, sub(mul(a1, a1), mul(a0, a0))));

    x = add(x, add(mul(v, p), scale(0.5, mul(a1, mul(p, p)))));
    v = add(v, mul(a1, p));

    d = sub(a1, a2);
    x = add(x, add(mul(v, d), scale(1.0 / 6.0, mul(mul(d, d), add(a2, scale(2.0, a1))))));
    v = add(v, scale(0.5, sub(mul(a1, a1), mul(a2, a2))));

    x = add(x, add(mul(v, q), scale(0.5, mul(a2, mul(q, q)))));
    v = add(v, mul(a2, q));

    d = sub(af, a2);
    x = add(x, add(mul(v, d), scale(1.0 / 6.0, mul(mul(d, d), add(af, scale(2.0, a2))))));
    return x;
}

struct Candidate {
    std::vector<Phase> phases;
    double time = 0.0;
};

class CandidateSet {
   public:
    explicit CandidateSet(const Endpoints& e) : e_(e) {}

    void offer(std::vector<Phase> phases) {
        for (auto& phase : phases) {
            if (!std::isfinite(phase.duration) || phase.duration < -kNegativeDurationTolerance) {
                return;
            }
            phase.duration = std::max(phase.duration, 0.0);
        }
        const KinematicState end = run({e_.a0, e_.v0, 0.0}, phases);
        if (std::abs(end.a - e_.af) > kCandidateTolerance ||
            std::abs(end.v - e_.vf) > kCandidateTolerance ||
            std::abs(end.x - e_.displacement) >
                kCandidateTolerance * std::max(1.0, std::abs(e_.displacement))) {
            return;
        }
        const AxisProfile profile({e_.a0, e_.v0, 0.0}, phases);
        if (!check_limits(profile, {1.0, 1.0, e_.vmax}, kCandidateTolerance).empty()) {
            return;
        }
        double time = 0.0;
        for (const auto& phase : phases) time += phase.duration;
        candidates_.push_back({std::move(phases), time});
    }

    [[nodiscard]] const std::vector<Candidate>& candidates() const { return candidates_; }

   private:
    Endpoints e_;
    std::vector<Candidate> candidates_;
};

std::vector<Phase> five_phases(double a0, double a1, double p, double a2, double q, double af) {
    return {{a1 - a0, 1.0}, {p, 0.0}, {a1 - a2, -1.0}, {q, 0.0}, {af - a2, 1.0}};
}

// Newton polish of even(u) + sign * sqrt(R(u)) * odd(u) = 0 starting from a root of the
// squared-out polynomial.
double polish_branch(const Ext& f, const Polynomial& radicand, double sign, double u) {
    const Polynomial de = f.even.derivative();
    const Polynomial dodd = f.odd.derivative();
    const Polynomial dr = radicand.derivative();
    const auto value = [&](double x) {
        return f.even(x) + sign * std::sqrt(std::max(radicand(x), 0.0)) * f.odd(x);
    };
    double best = value(u);
    for (int iter = 0; iter < 8 && best != 0.0; ++iter) {
        const double r = radicand(u);
        if (r <= 1e-14) {
            break;
        }
        const double root_r = std::sqrt(r);
        const double slope = de(u) + sign * (dr(u) / (2.0 * root_r) * f.odd(u) + root_r * dodd(u));
        if (slope == 0.0) {
            break;
        }
        const double next = u - best / slope;
        const double next_value = value(next);
        if (!(std::abs(next_value) < std::abs(best))) {
            break;
        }
        u = next;
        best = next_value;
    }
    return u;
}

// Type1 candidates (first jerk phase non-negative) in normalized units.
std::vector<Candidate> type1_candidates(const Endpoints& e) {
    CandidateSet set(e);
    const double margin = 1e-7;

    // Cruise at +vmax between two velocity changes.
    {
        const VelocityChange rise = velocity_change(e.a0, e.v0, 0.0, e.vmax, 1.0, 1.0);
        const VelocityChange fall = velocity_change(0.0, e.vmax, e.af, e.vf, 1.0, 1.0);
        std::vector<Phase> head(rise.phases.begin(), rise.phases.end());
        std::vector<Phase> tail(fall.phases.begin(), fall.phases.end());
        const double d_head = run({e.a0, e.v0, 0.0}, head).x;
        const double d_tail = run({0.0, e.vmax, 0.0}, tail).x;
        std::vector<Phase> phases = head;
        phases.push_back({(e.displacement - d_head - d_tail) / e.vmax, 0.0});
        phases.insert(phases.end(), tail.begin(), tail.end());
        set.offer(std::move(phases));
    }

    const Polynomial u = Polynomial::identity();
    const Ext var{u, Polynomial{}};
    const double dv = e.vf - e.v0;

    // No plateau: a1 = r with r^2 = a2^2 + K, unknown a2.
    {
        const double k = dv + 0.5 * (e.a0 * e.a0 - e.af * e.af);
        const ExtRing ring(u * u + Polynomial::constant(k));
        const Ext r{Polynomial{}, Polynomial::constant(1.0)};
        const Ext f = ring.sub(travel(ring, e, r, var, constant(0.0), constant(0.0)),
                               constant(e.displacement));
        const Polynomial squared = (f.even * f.even - ring.radicand() * (f.odd * f.odd)).trimmed(1e-14);
        if (squared.degree() > 0) {
            for (double root : solve_real_roots(squared, -1.0 - margin, std::min(e.af, 1.0) + margin)) {
                for (double sign : {1.0, -1.0}) {
                    const double a2 = polish_branch(f, ring.radicand(), sign, root);
                    const double radicand = ring.radicand()(a2);
                    if (radicand < -1e-12) {
                        continue;
                    }
                    const double a1 = sign * std::sqrt(std::max(radicand, 0.0));
                    set.offer(five_phases(e.a0, a1, 0.0, a2, 0.0, e.af));
                }
            }
        }
    }

    const ExtRing plain(Polynomial{});

    // Plateau at +amax, unknown a2.
    {
        const Polynomial p = Polynomial::constant(dv - 0.5 * (2.0 - e.a0 * e.a0 + e.af * e.af)) + u * u;
        const Ext f = plain.sub(travel(plain, e, constant(1.0), var, {p, Polynomial{}}, constant(0.0)),
                                constant(e.displacement));
        const Polynomial poly = f.even.trimmed(1e-14);
        if (poly.degree() > 0) {
            for (double a2 : solve_real_roots(poly, -1.0 - margin, std::min(e.af, 1.0) + margin)) {
                set.offer(five_phases(e.a0, 1.0, p(a2), a2, 0.0, e.af));
            }
        }
    }

    // Plateau at -amax, unknown a1.
    {
        const Polynomial q = Polynomial::constant(-0.5 * (e.a0 * e.a0 + 2.0 - e.af * e.af) - dv) + u * u;
        const Ext f = plain.sub(travel(plain, e, var, constant(-1.0), constant(0.0), {q, Polynomial{}}),
                                constant(e.displacement));
        const Polynomial poly = f.even.trimmed(1e-14);
        if (poly.degree() > 0) {
            for (double a1 : solve_real_roots(poly, std::max(e.a0, -1.0) - margin, 1.0 + margin)) {
                set.offer(five_phases(e.a0, a1, 0.0, -1.0, q(a1), e.af));
            }
        }
    }

    // Both plateaus, unknown p (the +amax hold); the -amax hold follows from velocity.
    {
        const double c = dv - 0.5 * (e.af * e.af - e.a0 * e.a0);
        const Polynomial q = u - Polynomial::constant(c);
        const Ext f = plain.sub(travel(plain, e, constant(1.0), constant(-1.0), var, {q, Polynomial{}}),
                                constant(e.displacement));
        const Polynomial poly = f.even.trimmed(1e-14);
        if (poly.degree() > 0) {
            for (double p : solve_real_roots(poly)) {
                set.offer(five_phases(e.a0, 1.0, p, -1.0, q(p), e.af));
            }
        }
    }

    return set.candidates();
}

void check_admissible(const KinematicState& init, const KinematicState& final,
                      const KinematicLimits& limits) {
    limits.validate();
    if (!is_admissible_start(init, limits)) {
        throw std::invalid_argument("initial state violates the kinematic limits");
    }
    if (!is_admissible_end(final, limits)) {
        throw std::invalid_argument("final state violates the kinematic limits");
    }
}

}  // namespace

const char* to_string(MotionType type) {
    switch (type) {
        case MotionType::Type1:
            return "type1";
        case MotionType::Type2:
            return "type2";
        case MotionType::Critical:
            return "critical";
    }
    return "unknown";
}

bool is_admissible_start(const KinematicState& state, const KinematicLimits& limits) {
    if (!std::isfinite(state.a) || !std::isfinite(state.v) || !std::isfinite(state.x)) {
        return false;
    }
    const double v_limit = limits.vmax * (1.0 + kAdmissibleSlack);
    const double coast = state.v + state.a * std::abs(state.a) / (2.0 * limits.jmax);
    return std::abs(state.a) <= limits.amax * (1.0 + kAdmissibleSlack) &&
           std::abs(state.v) <= v_limit && std::abs(coast) <= v_limit;
}

bool is_admissible_end(const KinematicState& state, const KinematicLimits& limits) {
    return is_admissible_start({-state.a, state.v, state.x}, limits);
}

AxisProfile direct_connection(const KinematicState& init, const KinematicState& final,
                              const KinematicLimits& limits) {
    check_admissible(init, final, limits);
    const VelocityChange change =
        velocity_change(init.a, init.v, final.a, final.v, limits.jmax, limits.amax);
    return AxisProfile(init, change.phases);
}

double critical_length(const KinematicState& init, const KinematicState& final,
                       const KinematicLimits& limits) {
    const AxisProfile profile = direct_connection(init, final, limits);
    return profile.end_state().x - init.x;
}

namespace {

bool at_critical(double displacement, double critical) {
    return std::abs(displacement - critical) <=
           1e-12 * std::max({1.0, std::abs(displacement), std::abs(critical)});
}

}  // namespace

MotionType classify(const KinematicState& init, const KinematicState& final, double displacement,
                    const KinematicLimits& limits) {
    const double dc = critical_length(init, final, limits);
    if (at_critical(displacement, dc)) {
        return MotionType::Critical;
    }
    return displacement > dc ? MotionType::Type1 : MotionType::Type2;
}

BoundaryProblem mirror_problem(const BoundaryProblem& problem) {
    const auto flip = [](const KinematicState& s) { return KinematicState{-s.a, -s.v, -s.x}; };
    return {flip(problem.init), flip(problem.final)};
}

AxisProfile mirrored(const AxisProfile& profile) {
    std::vector<Phase> phases = profile.phases();
    for (auto& phase : phases) phase.jerk = -phase.jerk;
    const KinematicState s = profile.start_state();
    return AxisProfile({-s.a, -s.v, -s.x}, phases, profile.t0());
}

AxisProfile plan_min_time_1d(const KinematicState& init, const KinematicState& final,
                             const KinematicLimits& limits, double t0) {
    check_admissible(init, final, limits);
    const double displacement = final.x - init.x;

    const AxisProfile direct = direct_connection(init, final, limits);
    const double dc = direct.end_state().x - init.x;
    if (at_critical(displacement, dc)) {
        return direct.shifted_to(t0);
    }

    // Work with jmax = amax = 1.
    const double time_unit = limits.amax / limits.jmax;
    const double vel_unit = limits.amax * time_unit;
    const double pos_unit = vel_unit * time_unit;
    const Endpoints normalized{init.a / limits.amax,   init.v / vel_unit,
                               final.a / limits.amax,  final.v / vel_unit,
                               displacement / pos_unit, limits.vmax / vel_unit};
    const Endpoints flipped{-normalized.a0, -normalized.v0,           -normalized.af,
                            -normalized.vf, -normalized.displacement, normalized.vmax};

    std::vector<Candidate> type1 = type1_candidates(normalized);
    std::vector<Candidate> type2 = type1_candidates(flipped);
    for (auto& candidate : type2) {
        for (auto& phase : candidate.phases) phase.jerk = -phase.jerk;
    }

    // The classified type is searched first so that exact ties resolve towards it.
    const bool prefer_type1 = displacement > dc;
    const Candidate* best = nullptr;
    for (const auto* group : prefer_type1 ? std::array{&type1, &type2} : std::array{&type2, &type1}) {
        for (const auto& candidate : *group) {
            if (best == nullptr || candidate.time < best->time) {
                best = &candidate;
            }
        }
    }
    if (best == nullptr) {
        throw std::runtime_error("plan_min_time_1d: no admissible profile found");
    }

    std::vector<Phase> phases = best->phases;
    for (auto& phase : phases) {
        phase.duration *= time_unit;
        phase.jerk *= limits.jmax;
    }
    return AxisProfile(init, phases, t0);
}

}  // namespace softmotion
