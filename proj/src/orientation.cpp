#include "softmotion/orientation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "softmotion/path.hpp"
#include "softmotion/sync.hpp"

namespace softmotion {

double Quaternion::norm() const { return std::sqrt(n * n + i * i + j * j + k * k); }

Quaternion Quaternion::normalized() const {
    const double len = norm();
    if (!(len > 0.0)) {
        throw std::invalid_argument("cannot normalize a zero quaternion");
    }
    return {n / len, i / len, j / len, k / len};
}

double Quaternion::dot(const Quaternion& o) const { return n * o.n + i * o.i + j * o.j + k * o.k; }

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {
        a.n * b.n - a.i * b.i - a.j * b.j - a.k * b.k,
        a.n * b.i + a.i * b.n + a.j * b.k - a.k * b.j,
        a.n * b.j - a.i * b.k + a.j * b.n + a.k * b.i,
        a.n * b.k + a.i * b.j - a.j * b.i + a.k * b.n,
    };
}

void require_unit(const Quaternion& q, const char* what) {
    if (!(std::abs(q.norm() - 1.0) <= 1e-3)) {
        throw std::invalid_argument(std::string(what) + ": quaternion is not unit-norm");
    }
}

std::array<std::array<double, 4>, 4> qr_matrix(const Quaternion& q) {
    const auto& [n, i, j, k] = q;
    return {{
        {n, k, -j, i},
        {-k, n, i, j},
        {j, -i, n, k},
        {-i, -j, -k, n},
    }};
}

Quaternion omega_to_qdot(const Quaternion& orient, const Vec3& w) {
    require_unit(orient, "omega_to_qdot");
    const auto qr = qr_matrix(orient);
    std::array<double, 4> rate{};
    for (std::size_t r = 0; r < 4; ++r) {
        rate[r] = 0.5 * (qr[r][0] * w[0] + qr[r][1] * w[1] + qr[r][2] * w[2]);
    }
    return {rate[3], rate[0], rate[1], rate[2]};
}

OmegaResult qdot_to_omega(const Quaternion& orient, const Quaternion& qdot) {
    const auto qr = qr_matrix(orient);
    const std::array<double, 4> rate{qdot.i, qdot.j, qdot.k, qdot.n};
    std::array<double, 4> out{};
    for (std::size_t c = 0; c < 4; ++c) {
        for (std::size_t r = 0; r < 4; ++r) {
            out[c] += 2.0 * qr[r][c] * rate[r];
        }
    }
    return {{out[0], out[1], out[2]}, out[3]};
}

Quaternion slerp(const Quaternion& a, const Quaternion& b, double s) {
    Quaternion target = a.dot(b) < 0.0 ? -b : b;
    const double cosine = std::clamp(a.dot(target), -1.0, 1.0);
    const double angle = std::acos(cosine);
    if (angle < 1e-12) {
        return a;
    }
    const double wa = std::sin((1.0 - s) * angle) / std::sin(angle);
    const double wb = std::sin(s * angle) / std::sin(angle);
    return Quaternion{wa * a.n + wb * target.n, wa * a.i + wb * target.i, wa * a.j + wb * target.j,
                      wa * a.k + wb * target.k}
        .normalized();
}

std::array<KinematicLimits, 7> pose_axis_limits(const KinematicLimits& linear,
                                                const KinematicLimits& angular) {
    linear.validate();
    angular.validate();
    const KinematicLimits half{0.5 * angular.jmax, 0.5 * angular.amax, 0.5 * angular.vmax};
    return {linear, linear, linear, half, half, half, half};
}

std::array<double, 7> to_coordinates(const Pose& pose) {
    const auto& q = pose.orient;
    return {pose.p[0], pose.p[1], pose.p[2], q.n, q.i, q.j, q.k};
}

Pose from_coordinates(const std::array<double, 7>& c) {
    return {{c[0], c[1], c[2]}, Quaternion{c[3], c[4], c[5], c[6]}.normalized()};
}

std::vector<AxisProfile> plan_pose_axes(const Pose& pose0, const Pose& posef,
                                        const KinematicLimits& linear,
                                        const KinematicLimits& angular) {
    require_unit(pose0.orient, "plan_pose_axes");
    require_unit(posef.orient, "plan_pose_axes");
    const auto limits = pose_axis_limits(linear, angular);
    const Quaternion q0 = pose0.orient;
    const Quaternion qf = q0.dot(posef.orient) < 0.0 ? -posef.orient : posef.orient;

    const double arc = std::acos(std::clamp(q0.normalized().dot(qf.normalized()), -1.0, 1.0));
    const auto pieces = static_cast<std::size_t>(std::max(1.0, std::ceil(arc / kMaxQuaternionChord)));
    if (pieces == 1) {
        const auto a = to_coordinates(pose0);
        const auto b = to_coordinates({posef.p, qf});
        return plan_line(a, b, limits);
    }

    std::vector<std::vector<double>> points;
    for (std::size_t m = 0; m <= pieces; ++m) {
        const double s = static_cast<double>(m) / static_cast<double>(pieces);
        Pose via;
        for (std::size_t d = 0; d < 3; ++d) {
            via.p[d] = m == pieces ? posef.p[d] : pose0.p[d] + (posef.p[d] - pose0.p[d]) * s;
        }
        via.orient = m == 0 ? q0 : m == pieces ? qf : slerp(q0, qf, s);
        const auto c = to_coordinates(via);
        points.emplace_back(c.begin(), c.end());
    }
    return plan_waypoint_path(points, limits).axes;
}

}  // namespace softmotion
