#pragma once

#include <array>
#include <vector>

#include "softmotion/profile.hpp"

namespace softmotion {

struct Quaternion {
    double n = 1.0;  // scalar part
    double i = 0.0;
    double j = 0.0;
    double k = 0.0;

    [[nodiscard]] double norm() const;
    [[nodiscard]] Quaternion normalized() const;
    [[nodiscard]] double dot(const Quaternion& other) const;
    [[nodiscard]] Quaternion operator-() const { return {-n, -i, -j, -k}; }
};

// Hamilton product.
Quaternion operator*(const Quaternion& a, const Quaternion& b);

// Throws std::invalid_argument if |q| differs from 1 by more than 1e-3.
void require_unit(const Quaternion& q, const char* what);

using Vec3 = std::array<double, 3>;

struct Pose {
    Vec3 p{};
    Quaternion orient;
};

struct Twist {
    Vec3 v{};
    Vec3 w{};
};

// Rows act on (qi, qj, qk, qn):
//   [ n  k -j  i]
//   [-k  n  i  j]
//   [ j -i  n  k]
//   [-i -j -k  n]
// Orthogonal for unit q.
std::array<std::array<double, 4>, 4> qr_matrix(const Quaternion& q);

// Rate of `orient` under angular velocity w: (1/2) Qr [w; 0], i.e. (1/2) (0, w) * orient.
// Throws for non-unit `orient`.
Quaternion omega_to_qdot(const Quaternion& orient, const Vec3& w);

struct OmegaResult {
    Vec3 w{};
    double residual = 0.0;  // fourth component, zero for norm-preserving rates
};

// [w; residual] = 2 Qr^T qdot.
OmegaResult qdot_to_omega(const Quaternion& orient, const Quaternion& qdot);

// Unit-speed interpolation on the great circle from a to b (shorter arc).
Quaternion slerp(const Quaternion& a, const Quaternion& b, double s);

// Chords in quaternion space longer than this (radians of arc) are split.
inline constexpr double kMaxQuaternionChord = 0.14;

// Seven coordinates (x, y, z, qn, qi, qj, qk) planned per axis and synchronized. Positions use
// `linear`; quaternion components use `angular` halved. posef's orientation is flipped into
// pose0's hemisphere. Rotations whose quaternion arc exceeds kMaxQuaternionChord pass through
// evenly spaced intermediate poses on the arc, keeping the quaternion norm within 1e-2 of one.
std::vector<AxisProfile> plan_pose_axes(const Pose& pose0, const Pose& posef,
                                        const KinematicLimits& linear,
                                        const KinematicLimits& angular);

// Limits used for the seven coordinates.
std::array<KinematicLimits, 7> pose_axis_limits(const KinematicLimits& linear,
                                                const KinematicLimits& angular);

std::array<double, 7> to_coordinates(const Pose& pose);

// Pose from seven coordinates, with the orientation renormalized.
Pose from_coordinates(const std::array<double, 7>& c);

}  // namespace softmotion
