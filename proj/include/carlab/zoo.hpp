#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "carlab/grid.hpp"

namespace carlab {

using ComplexFn = std::function<cplx(cplx)>;

/// Closed-form test function bundled with its closed-form dbar.
/// dbar = (i d/dy + d/dx)/2, i.e. d/d(zbar).
struct AnalyticField {
    std::string label;
    ComplexFn value;
    ComplexFn dbar;
    std::optional<double> support_radius;
    cplx support_center{0.0, 0.0};
    /// Set for z^-t with non-integer t: jump across {x <= 0, y = 0}.
    bool slit_discontinuous = false;

    /// Distance from the origin to the support disk (0 if unsupported or
    /// the disk covers the origin).
    double origin_clearance() const;
    /// True if the support disk stays off the closed negative real axis.
    bool avoids_slit() const;
};

/// Closed-form potential V with its L2 norm when known.
struct Potential {
    std::string label;
    ComplexFn value;
    std::optional<double> l2_norm_exact;
    std::optional<double> support_radius;
    cplx support_center{0.0, 0.0};
};

/// exp(1 - 1/(1 - s)), s = |z - center|^2 / radius^2, zero for s >= 1.
AnalyticField bump(cplx center, double radius);
/// z^n * bump(center, radius).
AnalyticField holo_window(int n_power, cplx center, double radius);
/// z^-t on the principal branch; evaluating at z = 0 yields NaN.
AnalyticField power_weight(double t);
/// exp(-a |z|^2).
AnalyticField gaussian(double a);
AnalyticField zero_field();
/// Leibniz product of two analytic fields; support is the tighter one.
AnalyticField product(const AnalyticField& f, const AnalyticField& g);

/// c |z|^-alpha on |z| <= R, else 0. The origin sample is dropped
/// (value 0) when alpha > 0.
Potential radial_power_potential(double alpha, double R, double c);
/// Smooth annular potential c * exp(1 - 1/(1 - s)) with
/// s = ((|z| - m)/w)^2, m and w the ring's midpoint and half width.
Potential ring_potential(double r_in, double r_out, double c);
Potential zero_potential();

/// Registry grammar: label[:comma-separated reals].
///   bump:cx,cy,r  holo:n,cx,cy,r  gaussian:a  zpow:t  zero
AnalyticField parse_field(const std::string& spec);
///   vpow:alpha,R,c  vring:r_in,r_out,c  vzero
Potential parse_potential(const std::string& spec);
/// Human-readable listing of both registries.
std::string registry_listing();

Field sample(const GridSpec& grid, const AnalyticField& f);
Field sample_dbar(const GridSpec& grid, const AnalyticField& f);
Field sample(const GridSpec& grid, const Potential& v);

}  // namespace carlab
