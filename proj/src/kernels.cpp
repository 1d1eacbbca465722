#include "carlab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace carlab {

namespace {

bool weight_skips(const RadialWeight& w, cplx z, double radius) {
    if (radius < w.exclusion_radius) return true;
    return std::abs(z - w.ball_center) > w.ball_radius;
}

double weight_value(const RadialWeight& w, double radius) {
    if (w.t == 0.0) return 1.0;
    return std::pow(w.scale / radius, w.t);
}

}  // namespace

namespace kernels {

void multiply(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
    const auto size = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < size; ++i) out[i] = a[i] * b[i];
}

void add_scaled(std::span<const cplx> a, cplx s, std::span<const cplx> b, std::span<cplx> out) {
    const auto size = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < size; ++i) out[i] = a[i] + s * b[i];
}

void scale_alternating(std::span<cplx> v, int n, double scale) {
#pragma omp parallel for schedule(static)
    for (int iy = 0; iy < n; ++iy) {
        cplx* row = v.data() + static_cast<std::size_t>(iy) * n;
        for (int ix = 0; ix < n; ++ix) {
            row[ix] *= ((ix + iy) & 1) ? -scale : scale;
        }
    }
}

double sum_abs_pow(std::span<const cplx> v, int n, double p) {
    std::vector<double> rows(n, 0.0);
#pragma omp parallel for schedule(static)
    for (int iy = 0; iy < n; ++iy) {
        const cplx* row = v.data() + static_cast<std::size_t>(iy) * n;
        double acc = 0.0;
        for (int ix = 0; ix < n; ++ix) acc += abs_pow(row[ix], p);
        rows[iy] = acc;
    }
    double total = 0.0;
    for (double r : rows) total += r;
    return total;
}

double max_abs(std::span<const cplx> v) {
    const auto size = static_cast<std::ptrdiff_t>(v.size());
    double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m)
    for (std::ptrdiff_t i = 0; i < size; ++i) m = std::max(m, std::abs(v[i]));
    return m;
}

double sum_weighted_abs_pow(std::span<const cplx> v, const GridSpec& grid, double p,
                            const RadialWeight& w) {
    const int n = grid.n();
    std::vector<double> rows(n, 0.0);
#pragma omp parallel for schedule(static)
    for (int iy = 0; iy < n; ++iy) {
        const cplx* row = v.data() + static_cast<std::size_t>(iy) * n;
        double acc = 0.0;
        for (int ix = 0; ix < n; ++ix) {
            const cplx z = grid.point(ix, iy);
            const double radius = std::abs(z);
            if (weight_skips(w, z, radius) || row[ix] == cplx{}) continue;
            acc += abs_pow(weight_value(w, radius) * row[ix], p);
        }
        rows[iy] = acc;
    }
    double total = 0.0;
    for (double r : rows) total += r;
    return total;
}

void fill(const GridSpec& grid, const PointFn& fn, std::span<cplx> out) {
    const int n = grid.n();
#pragma omp parallel for schedule(static)
    for (int iy = 0; iy < n; ++iy) {
        const double y = grid.coord(iy);
        for (int ix = 0; ix < n; ++ix) {
            out[static_cast<std::size_t>(iy) * n + ix] = fn(grid.coord(ix), y);
        }
    }
}

void fill_frequency(const GridSpec& grid, const PointFn& fn, std::span<cplx> out) {
    const int n = grid.n();
#pragma omp parallel for schedule(static)
    for (int iy = 0; iy < n; ++iy) {
        const double eta = grid.freq(iy);
        for (int ix = 0; ix < n; ++ix) {
            out[static_cast<std::size_t>(iy) * n + ix] = fn(grid.freq(ix), eta);
        }
    }
}

}  // namespace kernels

namespace serial {

void multiply(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i];
}

void add_scaled(std::span<const cplx> a, cplx s, std::span<const cplx> b, std::span<cplx> out) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + s * b[i];
}

void scale_alternating(std::span<cplx> v, int n, double scale) {
    for (int iy = 0; iy < n; ++iy) {
        for (int ix = 0; ix < n; ++ix) {
            const double sign = ((ix + iy) % 2 == 0) ? 1.0 : -1.0;
            v[static_cast<std::size_t>(iy) * n + ix] *= sign * scale;
        }
    }
}

double sum_abs_pow(std::span<const cplx> v, int, double p) {
    double total = 0.0;
    for (const cplx& x : v) total += abs_pow(x, p);
    return total;
}

double max_abs(std::span<const cplx> v) {
    double m = 0.0;
    for (const cplx& x : v) m = std::max(m, std::abs(x));
    return m;
}

double sum_weighted_abs_pow(std::span<const cplx> v, const GridSpec& grid, double p,
                            const RadialWeight& w) {
    double total = 0.0;
    for (int iy = 0; iy < grid.n(); ++iy) {
        for (int ix = 0; ix < grid.n(); ++ix) {
            const cplx z = grid.point(ix, iy);
            const double radius = std::abs(z);
            const cplx value = v[static_cast<std::size_t>(iy) * grid.n() + ix];
            if (weight_skips(w, z, radius) || value == cplx{}) continue;
            total += abs_pow(weight_value(w, radius) * value, p);
        }
    }
    return total;
}

void fill(const GridSpec& grid, const PointFn& fn, std::span<cplx> out) {
    for (int iy = 0; iy < grid.n(); ++iy) {
        for (int ix = 0; ix < grid.n(); ++ix) {
            out[static_cast<std::size_t>(iy) * grid.n() + ix] = fn(grid.coord(ix), grid.coord(iy));
        }
    }
}

void fill_frequency(const GridSpec& grid, const PointFn& fn, std::span<cplx> out) {
    for (int iy = 0; iy < grid.n(); ++iy) {
        for (int ix = 0; ix < grid.n(); ++ix) {
            out[static_cast<std::size_t>(iy) * grid.n() + ix] = fn(grid.freq(ix), grid.freq(iy));
        }
    }
}

}  // namespace serial

}  // namespace carlab
