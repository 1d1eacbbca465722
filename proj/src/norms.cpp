#include "carlab/norms.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "carlab/error.hpp"

namespace carlab {

namespace {

double cell_measure(const Field& field) {
    const double d = field.space() == Space::position ? field.grid().spacing()
                                                      : field.grid().freq_spacing();
    return d * d;
}

void check_p(double p) {
    if (!(p >= 1.0)) {
        std::ostringstream os;
        os << "norm exponent p=" << p << " must be >= 1";
        throw Error(os.str());
    }
}

}  // namespace

double lp_norm(const Field& field, double p) {
    check_p(p);
    if (std::isinf(p)) return kernels::max_abs(field.values());
    const double sum = kernels::sum_abs_pow(field.values(), field.grid().n(), p);
    return std::pow(cell_measure(field) * sum, 1.0 / p);
}

void check_vanishes_on_disk(const Field& field, double radius) {
    const GridSpec& g = field.grid();
    for (int iy = 0; iy < g.n(); ++iy) {
        for (int ix = 0; ix < g.n(); ++ix) {
            const cplx z = g.point(ix, iy);
            if (std::abs(z) < radius && std::abs(field(ix, iy)) > kVanishTol) {
                std::ostringstream os;
                os << "field is nonzero (|f|=" << std::abs(field(ix, iy)) << ") at ("
                   << z.real() << ", " << z.imag() << ") inside the exclusion disk of radius "
                   << radius;
                throw Error(os.str());
            }
        }
    }
}

double weighted_lp_norm(const Field& field, double p, const RadialWeight& weight) {
    check_p(p);
    if (field.space() != Space::position) throw Error("weighted norm needs a position-space field");
    if (weight.t < 0.0) throw Error("weight exponent t must be nonnegative");
    if (weight.t > 0.0 && weight.exclusion_radius < 2.0 * field.grid().spacing()) {
        std::ostringstream os;
        os << "exclusion radius " << weight.exclusion_radius << " must be >= 2h = "
           << 2.0 * field.grid().spacing() << " when t > 0";
        throw Error(os.str());
    }
    check_vanishes_on_disk(field, weight.exclusion_radius);
    if (std::isinf(p)) throw Error("weighted norm supports finite p only");
    const double sum = kernels::sum_weighted_abs_pow(field.values(), field.grid(), p, weight);
    return std::pow(cell_measure(field) * sum, 1.0 / p);
}

double weighted_lp_norm(const Field& field, double p, double t, double exclusion_radius) {
    if (t == 0.0) {
        check_vanishes_on_disk(field, exclusion_radius);
        return lp_norm(field, p);
    }
    RadialWeight w;
    w.t = t;
    w.exclusion_radius = exclusion_radius;
    return weighted_lp_norm(field, p, w);
}

double ball_lp_norm(const Field& field, double p, double radius) {
    RadialWeight w;
    w.ball_radius = radius;
    return weighted_lp_norm(field, p, w);
}

}  // namespace carlab
