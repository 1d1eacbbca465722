#include "carlab/grid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

#include "carlab/error.hpp"
#include "carlab/kernels.hpp"

namespace carlab {

GridSpec::GridSpec(int n, double half_width)
    : n_(n),
      half_width_(half_width),
      spacing_(2.0 * half_width / n),
      freq_spacing_(std::numbers::pi / half_width) {
    if (n < 16 || !std::has_single_bit(static_cast<unsigned>(n))) {
        std::ostringstream os;
        os << "grid size n=" << n << " must be a power of two >= 16";
        throw Error(os.str());
    }
    if (!(half_width > 0.0) || !std::isfinite(half_width)) {
        std::ostringstream os;
        os << "grid half width L=" << half_width << " must be positive";
        throw Error(os.str());
    }
}

GridSpec make_grid(int n, double half_width) { return GridSpec(n, half_width); }

const char* to_string(Space s) { return s == Space::position ? "position" : "frequency"; }

Field::Field(GridSpec grid, Space space)
    : grid_(grid), values_(grid.size(), cplx{}), space_(space) {}

Field::Field(GridSpec grid, std::vector<cplx> values, Space space)
    : grid_(grid), values_(std::move(values)), space_(space) {
    if (values_.size() != grid_.size()) {
        std::ostringstream os;
        os << "field has " << values_.size() << " samples, grid needs " << grid_.size();
        throw Error(os.str());
    }
    const auto bad = std::find_if(values_.begin(), values_.end(), [](const cplx& v) {
        return !std::isfinite(v.real()) || !std::isfinite(v.imag());
    });
    if (bad != values_.end()) {
        const auto i = static_cast<int>(bad - values_.begin());
        std::ostringstream os;
        os << "non-finite sample at index (" << i % grid_.n() << ", " << i / grid_.n() << ")";
        throw Error(os.str());
    }
}

Exponents::Exponents(double p, double q) : p_(p), q_(q) {
    if (!(p > 1.0 && p < 2.0)) {
        std::ostringstream os;
        os << "exponent p=" << p << " must lie in (1, 2)";
        throw Error(os.str());
    }
    if (!(q > 2.0) || !std::isfinite(q)) {
        std::ostringstream os;
        os << "exponent q=" << q << " must lie in (2, inf)";
        throw Error(os.str());
    }
    if (std::abs(1.0 / p - 1.0 / q - 0.5) > 1e-12) {
        std::ostringstream os;
        os.precision(17);
        os << "exponents (" << p << ", " << q << ") violate 1/p - 1/q = 1/2";
        throw Error(os.str());
    }
}

Exponents Exponents::from_p(double p) {
    if (!(p > 1.0 && p < 2.0)) {
        std::ostringstream os;
        os << "exponent p=" << p << " must lie in (1, 2)";
        throw Error(os.str());
    }
    return Exponents(p, 1.0 / (1.0 / p - 0.5));
}

Field sample(const GridSpec& grid, const PointFn& fn) {
    std::vector<cplx> values(grid.size());
    kernels::fill(grid, fn, values);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i].real()) || !std::isfinite(values[i].imag())) {
            const int ix = static_cast<int>(i % grid.n());
            const int iy = static_cast<int>(i / grid.n());
            std::ostringstream os;
            os << "function is not finite at grid point (" << ix << ", " << iy << ") = ("
               << grid.coord(ix) << ", " << grid.coord(iy) << ")";
            throw Error(os.str());
        }
    }
    return Field(grid, std::move(values), Space::position);
}

Field sample(const GridSpec& grid, const std::function<cplx(cplx)>& fn) {
    return sample(grid, PointFn([&fn](double x, double y) { return fn(cplx{x, y}); }));
}

Field restrict_ball(const Field& field, cplx center, double r) {
    if (!(r > 0.0)) throw Error("restrict_ball radius must be positive");
    if (field.space() != Space::position) throw Error("restrict_ball needs a position-space field");
    const GridSpec& g = field.grid();
    std::vector<cplx> out(field.values().begin(), field.values().end());
    for (int iy = 0; iy < g.n(); ++iy) {
        for (int ix = 0; ix < g.n(); ++ix) {
            if (std::abs(g.point(ix, iy) - center) > r) {
                out[static_cast<std::size_t>(iy) * g.n() + ix] = cplx{};
            }
        }
    }
    return Field(g, std::move(out), Space::position);
}

namespace {

void require_compatible(const Field& a, const Field& b) {
    if (!(a.grid() == b.grid()) || a.space() != b.space()) {
        throw Error("pointwise operation on fields with different grids or spaces");
    }
}

}  // namespace

Field operator*(const Field& a, const Field& b) {
    require_compatible(a, b);
    std::vector<cplx> out(a.grid().size());
    kernels::multiply(a.values(), b.values(), out);
    return Field(a.grid(), std::move(out), a.space());
}

Field operator+(const Field& a, const Field& b) {
    require_compatible(a, b);
    std::vector<cplx> out(a.grid().size());
    kernels::add_scaled(a.values(), 1.0, b.values(), out);
    return Field(a.grid(), std::move(out), a.space());
}

Field operator-(const Field& a, const Field& b) {
    require_compatible(a, b);
    std::vector<cplx> out(a.grid().size());
    kernels::add_scaled(a.values(), -1.0, b.values(), out);
    return Field(a.grid(), std::move(out), a.space());
}

Field operator*(cplx c, const Field& a) {
    std::vector<cplx> out(a.values().begin(), a.values().end());
    for (cplx& v : out) v *= c;
    return Field(a.grid(), std::move(out), a.space());
}

Field abs(const Field& a) {
    std::vector<cplx> out(a.grid().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::abs(a[i]);
    return Field(a.grid(), std::move(out), a.space());
}

}  // namespace carlab
