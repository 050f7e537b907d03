#pragma once

#include <span>
#include <vector>

#include "softmotion/profile.hpp"

namespace softmotion {

// Straight-line rest-to-rest motion from p0 to pf. The axis with the largest displacement runs
// at `limits`; every other axis runs at limits scaled by |d_i| / |d_max|, which gives it the
// same duration and keeps all axes at the same fraction of their displacement at every instant.
// Axes without displacement (and all axes when p0 == pf) get empty profiles.
std::vector<AxisProfile> plan_ptp_nd(std::span<const double> p0, std::span<const double> pf,
                                     const KinematicLimits& limits, double t0 = 0.0);

// Limits of the normalized progress s(t) in [0, 1] for a straight line from p0 to pf when axis i
// has its own limits: min over moving axes of (jmax_i, amax_i, vmax_i) / |pf_i - p0_i|.
// `limits` holds one entry per axis or a single shared entry. Throws if p0 == pf.
KinematicLimits line_progress_limits(std::span<const double> p0, std::span<const double> pf,
                                     std::span<const KinematicLimits> limits);

// Straight line from p0 to pf: x_i(t) = p0_i + (pf_i - p0_i) s(t), with s the rest-to-rest
// minimal-time progress under line_progress_limits. All axes share segment timing exactly.
std::vector<AxisProfile> plan_line(std::span<const double> p0, std::span<const double> pf,
                                   std::span<const KinematicLimits> limits, double t0 = 0.0);

// Limits under which a minimal-time motion lasting t_opt lasts t_imp instead:
// (jmax / s^3, amax / s^2, vmax / s) with s = t_imp / t_opt.
// Throws std::invalid_argument unless t_imp >= t_opt > 0.
KinematicLimits scale_limits_for_duration(const KinematicLimits& limits, double t_opt,
                                          double t_imp);

}  // namespace softmotion
