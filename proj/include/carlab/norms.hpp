#pragma once

#include "carlab/grid.hpp"
#include "carlab/kernels.hpp"

namespace carlab {

/// Samples with modulus at or below this count as vanishing.
inline constexpr double kVanishTol = 1e-13;

/// Riemann-sum norm (h^2 sum |f|^p)^(1/p); p = infinity gives max |f|.
/// Applies to position or frequency fields (frequency uses Delta^2).
double lp_norm(const Field& field, double p);

/// lp_norm of |z|^-t f. The field must vanish (|f| <= 1e-13) on the disk
/// |z| < exclusion_radius, which must be at least 2h when t > 0; those
/// samples and exact zeros carry weight 0. t = 0 returns lp_norm exactly.
double weighted_lp_norm(const Field& field, double p, double t, double exclusion_radius);

/// General weighted norm (h^2 sum over admitted samples |w f|^p)^(1/p)
/// with w = (scale/|z|)^t; used for ball-restricted Carleman quantities.
double weighted_lp_norm(const Field& field, double p, const RadialWeight& weight);

/// Throws if any sample inside |z| < radius exceeds kVanishTol.
void check_vanishes_on_disk(const Field& field, double radius);

/// L2 norm over the disk |z| <= radius (convenience for the bootstrap).
double ball_lp_norm(const Field& field, double p, double radius);

}  // namespace carlab
