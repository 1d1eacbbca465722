#include "carlab/zoo.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "carlab/error.hpp"

namespace carlab {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

// exp(1 - 1/(1 - s)) and its derivative factor -1/(1 - s)^2.
double bump_profile(double s) { return s < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - s)) : 0.0; }

}  // namespace

double AnalyticField::origin_clearance() const {
    if (!support_radius) return 0.0;
    return std::max(0.0, std::abs(support_center) - *support_radius);
}

bool AnalyticField::avoids_slit() const {
    if (!support_radius) return false;
    const double cx = support_center.real();
    const double cy = support_center.imag();
    const double r = *support_radius;
    // Distance from the center to the ray {x <= 0, y = 0}.
    const double dist = cx >= 0.0 ? std::hypot(cx, cy) : std::abs(cy);
    return dist > r;
}

AnalyticField bump(cplx center, double radius) {
    if (!(radius > 0.0)) throw Error("bump radius must be positive");
    AnalyticField f;
    f.label = "bump:" + fmt(center.real()) + "," + fmt(center.imag()) + "," + fmt(radius);
    const double r2 = radius * radius;
    f.value = [=](cplx z) -> cplx { return bump_profile(std::norm(z - center) / r2); };
    f.dbar = [=](cplx z) -> cplx {
        const double s = std::norm(z - center) / r2;
        if (s >= 1.0) return 0.0;
        const double d = 1.0 - s;
        return bump_profile(s) * (-1.0 / (d * d)) * (z - center) / r2;
    };
    f.support_radius = radius;
    f.support_center = center;
    return f;
}

AnalyticField holo_window(int n_power, cplx center, double radius) {
    if (n_power < 0) throw Error("holo_window power must be nonnegative");
    AnalyticField b = bump(center, radius);
    AnalyticField f;
    f.label = "holo:" + std::to_string(n_power) + "," + fmt(center.real()) + "," +
              fmt(center.imag()) + "," + fmt(radius);
    f.value = [=](cplx z) { return std::pow(z, n_power) * b.value(z); };
    f.dbar = [=](cplx z) { return std::pow(z, n_power) * b.dbar(z); };
    f.support_radius = radius;
    f.support_center = center;
    return f;
}

AnalyticField power_weight(double t) {
    if (!(t >= 0.0)) throw Error("power_weight exponent must be nonnegative");
    AnalyticField f;
    f.label = "zpow:" + fmt(t);
    f.value = [=](cplx z) -> cplx {
        if (z == cplx{}) return {std::numeric_limits<double>::quiet_NaN(), 0.0};
        if (t == 0.0) return 1.0;
        return std::pow(z, -t);
    };
    f.dbar = [=](cplx z) -> cplx {
        if (z == cplx{}) return {std::numeric_limits<double>::quiet_NaN(), 0.0};
        return 0.0;
    };
    f.slit_discontinuous = t != std::floor(t);
    return f;
}

AnalyticField gaussian(double a) {
    if (!(a > 0.0)) throw Error("gaussian parameter a must be positive");
    AnalyticField f;
    f.label = "gaussian:" + fmt(a);
    f.value = [=](cplx z) -> cplx { return std::exp(-a * std::norm(z)); };
    f.dbar = [=](cplx z) -> cplx { return -a * z * std::exp(-a * std::norm(z)); };
    return f;
}

AnalyticField zero_field() {
    AnalyticField f;
    f.label = "zero";
    f.value = [](cplx) { return cplx{}; };
    f.dbar = [](cplx) { return cplx{}; };
    f.support_radius = std::numeric_limits<double>::min();
    f.support_center = cplx{1.0, 0.0};
    return f;
}

AnalyticField product(const AnalyticField& f, const AnalyticField& g) {
    // Outside a compact support the product vanishes; the other factor is
    // never evaluated there, so singular partners (z^-t at 0) are safe.
    const auto outside = [f, g](cplx z) {
        if (f.support_radius && std::abs(z - f.support_center) >= *f.support_radius) return true;
        return g.support_radius && std::abs(z - g.support_center) >= *g.support_radius;
    };
    AnalyticField out;
    out.label = f.label + "*" + g.label;
    out.value = [f, g, outside](cplx z) {
        return outside(z) ? cplx{} : f.value(z) * g.value(z);
    };
    out.dbar = [f, g, outside](cplx z) {
        return outside(z) ? cplx{} : f.dbar(z) * g.value(z) + f.value(z) * g.dbar(z);
    };
    if (f.support_radius && (!g.support_radius || *f.support_radius <= *g.support_radius)) {
        out.support_radius = f.support_radius;
        out.support_center = f.support_center;
    } else if (g.support_radius) {
        out.support_radius = g.support_radius;
        out.support_center = g.support_center;
    }
    out.slit_discontinuous = f.slit_discontinuous || g.slit_discontinuous;
    return out;
}

Potential radial_power_potential(double alpha, double R, double c) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw Error("radial power alpha must lie in [0, 1)");
    if (!(R > 0.0)) throw Error("radial power support radius must be positive");
    if (!(c > 0.0)) throw Error("radial power amplitude must be positive");
    Potential v;
    v.label = "vpow:" + fmt(alpha) + "," + fmt(R) + "," + fmt(c);
    v.value = [=](cplx z) -> cplx {
        const double r = std::abs(z);
        if (r > R) return 0.0;
        if (alpha == 0.0) return c;
        if (r == 0.0) return 0.0;
        return c * std::pow(r, -alpha);
    };
    v.l2_norm_exact =
        c * std::sqrt(2.0 * std::numbers::pi / (2.0 - 2.0 * alpha)) * std::pow(R, 1.0 - alpha);
    v.support_radius = R;
    return v;
}

Potential ring_potential(double r_in, double r_out, double c) {
    if (!(r_in >= 0.0 && r_out > r_in)) throw Error("ring potential needs 0 <= r_in < r_out");
    Potential v;
    v.label = "vring:" + fmt(r_in) + "," + fmt(r_out) + "," + fmt(c);
    const double mid = 0.5 * (r_in + r_out);
    const double half = 0.5 * (r_out - r_in);
    v.value = [=](cplx z) -> cplx {
        const double d = (std::abs(z) - mid) / half;
        return c * bump_profile(d * d);
    };
    v.support_radius = r_out;
    return v;
}

Potential zero_potential() {
    Potential v;
    v.label = "vzero";
    v.value = [](cplx) { return cplx{}; };
    v.l2_norm_exact = 0.0;
    v.support_radius = std::numeric_limits<double>::min();
    return v;
}

namespace {

struct Label {
    std::string name;
    std::vector<double> args;
};

Label split_label(const std::string& spec) {
    Label out;
    const auto colon = spec.find(':');
    out.name = spec.substr(0, colon);
    if (colon == std::string::npos) return out;
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) {
            throw Error("malformed number '" + item + "' in label '" + spec + "'\n" +
                        registry_listing());
        }
        out.args.push_back(v);
    }
    return out;
}

void expect_args(const Label& l, std::size_t count, const std::string& spec) {
    if (l.args.size() != count) {
        throw Error("label '" + spec + "' needs " + std::to_string(count) + " arguments\n" +
                    registry_listing());
    }
}

}  // namespace

AnalyticField parse_field(const std::string& spec) {
    const Label l = split_label(spec);
    if (l.name == "bump") {
        expect_args(l, 3, spec);
        return bump({l.args[0], l.args[1]}, l.args[2]);
    }
    if (l.name == "holo") {
        expect_args(l, 4, spec);
        return holo_window(static_cast<int>(l.args[0]), {l.args[1], l.args[2]}, l.args[3]);
    }
    if (l.name == "gaussian") {
        expect_args(l, 1, spec);
        return gaussian(l.args[0]);
    }
    if (l.name == "zpow") {
        expect_args(l, 1, spec);
        return power_weight(l.args[0]);
    }
    if (l.name == "zero") {
        expect_args(l, 0, spec);
        return zero_field();
    }
    throw Error("unknown function label '" + spec + "'\n" + registry_listing());
}

Potential parse_potential(const std::string& spec) {
    const Label l = split_label(spec);
    if (l.name == "vpow") {
        expect_args(l, 3, spec);
        return radial_power_potential(l.args[0], l.args[1], l.args[2]);
    }
    if (l.name == "vring") {
        expect_args(l, 3, spec);
        return ring_potential(l.args[0], l.args[1], l.args[2]);
    }
    if (l.name == "vzero") {
        expect_args(l, 0, spec);
        return zero_potential();
    }
    throw Error("unknown potential label '" + spec + "'\n" + registry_listing());
}

std::string registry_listing() {
    return "functions:\n"
           "  bump:cx,cy,r      C-infinity bump centered at cx+i*cy\n"
           "  holo:n,cx,cy,r    z^n times bump\n"
           "  gaussian:a        exp(-a|z|^2)\n"
           "  zpow:t            z^-t (principal branch)\n"
           "  zero              identically zero\n"
           "potentials:\n"
           "  vpow:alpha,R,c    c|z|^-alpha on |z| <= R\n"
           "  vring:r0,r1,c     smooth ring supported in r0 <= |z| <= r1\n"
           "  vzero             identically zero\n";
}

Field sample(const GridSpec& grid, const AnalyticField& f) { return sample(grid, f.value); }

Field sample_dbar(const GridSpec& grid, const AnalyticField& f) { return sample(grid, f.dbar); }

Field sample(const GridSpec& grid, const Potential& v) { return sample(grid, v.value); }

}  // namespace carlab
