#pragma once

// Data-parallel inner loops. Every kernel in carlab::kernels has a plain
// single-threaded twin in carlab::serial; the serial versions are kept as
// the reference for tests and for bench/.
//
// Reductions accumulate one partial per grid row and add the rows in
// order, so results do not depend on the thread count.

#include <cmath>
#include <limits>
#include <span>

#include "carlab/grid.hpp"

namespace carlab {

/// Radial weight (scale/|z|)^t applied inside a quadrature sum.
/// Samples with |z| < exclusion_radius or |z - ball_center| > ball_radius
/// are skipped.
struct RadialWeight {
    double t = 0.0;
    double scale = 1.0;
    double exclusion_radius = 0.0;
    double ball_radius = std::numeric_limits<double>::infinity();
    cplx ball_center{0.0, 0.0};
};

namespace kernels {

void multiply(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out);
/// out = a + s*b
void add_scaled(std::span<const cplx> a, cplx s, std::span<const cplx> b, std::span<cplx> out);
/// v[iy*n + ix] *= scale * (-1)^(ix + iy)
void scale_alternating(std::span<cplx> v, int n, double scale);
double sum_abs_pow(std::span<const cplx> v, int n, double p);
double max_abs(std::span<const cplx> v);
double sum_weighted_abs_pow(std::span<const cplx> v, const GridSpec& grid, double p,
                            const RadialWeight& w);
void fill(const GridSpec& grid, const PointFn& fn, std::span<cplx> out);
/// Like fill, on the frequency lattice: fn(xi, eta).
void fill_frequency(const GridSpec& grid, const PointFn& fn, std::span<cplx> out);

}  // namespace kernels

namespace serial {

void multiply(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out);
void add_scaled(std::span<const cplx> a, cplx s, std::span<const cplx> b, std::span<cplx> out);
void scale_alternating(std::span<cplx> v, int n, double scale);
double sum_abs_pow(std::span<const cplx> v, int n, double p);
double max_abs(std::span<const cplx> v);
double sum_weighted_abs_pow(std::span<const cplx> v, const GridSpec& grid, double p,
                            const RadialWeight& w);
void fill(const GridSpec& grid, const PointFn& fn, std::span<cplx> out);
void fill_frequency(const GridSpec& grid, const PointFn& fn, std::span<cplx> out);

}  // namespace serial

/// |z|^p with the p = 2 and p = 1 cases kept exact.
inline double abs_pow(cplx z, double p) {
    if (p == 2.0) return std::norm(z);
    if (p == 1.0) return std::abs(z);
    return std::pow(std::abs(z), p);
}

}  // namespace carlab
