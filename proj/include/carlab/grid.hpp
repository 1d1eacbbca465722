#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace carlab {

using cplx = std::complex<double>;

/// Uniform square lattice over [-L, L)^2 with n samples per axis.
///
/// Position samples sit at x_j = -L + h*j, so the origin is the sample
/// j = n/2 on both axes. The matching frequency lattice is Delta*m with
/// m = j - n/2 in [-n/2, n/2) and Delta = pi/L.
class GridSpec {
public:
    GridSpec(int n, double half_width);

    int n() const noexcept { return n_; }
    double half_width() const noexcept { return half_width_; }
    double spacing() const noexcept { return spacing_; }
    double freq_spacing() const noexcept { return freq_spacing_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(n_) * n_; }

    double coord(int j) const noexcept { return -half_width_ + spacing_ * j; }
    double freq(int j) const noexcept { return freq_spacing_ * (j - n_ / 2); }
    cplx point(int ix, int iy) const noexcept { return {coord(ix), coord(iy)}; }
    int origin_index() const noexcept { return n_ / 2; }
    /// Largest frequency radius fully inside the lattice.
    double nyquist() const noexcept { return freq_spacing_ * (n_ / 2); }

    bool operator==(const GridSpec&) const = default;

private:
    int n_;
    double half_width_;
    double spacing_;
    double freq_spacing_;
};

/// Validating constructor: n must be a power of two >= 16 and L > 0.
GridSpec make_grid(int n, double half_width);

enum class Space : std::uint8_t { position = 0, frequency = 1 };

const char* to_string(Space s);

/// n x n complex samples, row-major with y as the slow index.
class Field {
public:
    Field(GridSpec grid, Space space);
    /// Rejects a size mismatch or any non-finite sample.
    Field(GridSpec grid, std::vector<cplx> values, Space space);

    const GridSpec& grid() const noexcept { return grid_; }
    Space space() const noexcept { return space_; }
    std::span<const cplx> values() const noexcept { return values_; }
    const cplx& operator()(int ix, int iy) const noexcept {
        return values_[static_cast<std::size_t>(iy) * grid_.n() + ix];
    }
    const cplx& operator[](std::size_t i) const noexcept { return values_[i]; }

    /// Moves the sample buffer out, leaving this field empty.
    std::vector<cplx> release() && { return std::move(values_); }

private:
    GridSpec grid_;
    std::vector<cplx> values_;
    Space space_;
};

/// A (p, q) pair on the critical line 1/p - 1/q = 1/2 with 1 < p < 2 < q.
class Exponents {
public:
    Exponents(double p, double q);
    /// Derives q from the gap condition.
    static Exponents from_p(double p);

    double p() const noexcept { return p_; }
    double q() const noexcept { return q_; }

private:
    double p_;
    double q_;
};

using PointFn = std::function<cplx(double x, double y)>;

/// Samples fn at every grid point. A non-finite value is an error that
/// names the offending point.
Field sample(const GridSpec& grid, const PointFn& fn);
Field sample(const GridSpec& grid, const std::function<cplx(cplx)>& fn);

/// Zeroes every sample with |z - center| > r.
Field restrict_ball(const Field& field, cplx center, double r);

/// Pointwise helpers used across modules.
Field operator*(const Field& a, const Field& b);
Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);
Field operator*(cplx c, const Field& a);
Field abs(const Field& a);

}  // namespace carlab
