#include "carlab/family.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "carlab/error.hpp"
#include "carlab/fft.hpp"
#include "carlab/kernels.hpp"
#include "carlab/spectral.hpp"
#include "carlab/zoo.hpp"

namespace carlab {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

std::vector<double> parse_reals(const std::string& text, const std::string& label) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error("bad number '" + item + "' in input label '" + label + "'");
        }
    }
    return out;
}

int integer_arg(double v, const std::string& label) {
    if (v != std::round(v)) throw Error("input label '" + label + "' needs integer band indices");
    return static_cast<int>(v);
}

}  // namespace

Field lattice_exponential(const GridSpec& grid, int mx, int my) {
    const int half = grid.n() / 2;
    if (mx < -half || mx >= half || my < -half || my >= half) {
        std::ostringstream os;
        os << "lattice frequency (" << mx << ", " << my << ") outside [-" << half << ", " << half
           << ")";
        throw Error(os.str());
    }
    const double xi = mx * grid.freq_spacing();
    const double eta = my * grid.freq_spacing();
    return sample(grid, [xi, eta](double x, double y) { return std::polar(1.0, xi * x + eta * y); });
}

Field wave_packet(const GridSpec& grid, cplx z0, double sigma, cplx zeta0) {
    if (!(sigma > 0.0)) throw Error("wave packet width must be positive");
    const double s2 = 2.0 * sigma * sigma;
    return sample(grid, [=](double x, double y) {
        const double dx = x - z0.real();
        const double dy = y - z0.imag();
        return std::polar(std::exp(-(dx * dx + dy * dy) / s2),
                          zeta0.real() * x + zeta0.imag() * y);
    });
}

Field random_band_limited(const GridSpec& grid, double center, double spread, Rng& rng, int atoms,
                          double log_width) {
    if (!(center > 0.0) || !(log_width > 0.0) || atoms < 1) {
        throw Error("random band-limited field needs center > 0, log_width > 0, atoms >= 1");
    }
    struct Atom {
        double x, y;
        cplx weight;
    };
    std::vector<Atom> list;
    for (int a = 0; a < atoms; ++a) {
        const double x = spread * (2.0 * rng.uniform() - 1.0);
        const double y = spread * (2.0 * rng.uniform() - 1.0);
        const double theta = 2.0 * std::numbers::pi * rng.uniform();
        const double amp = 0.5 + rng.uniform();
        list.push_back({x, y, std::polar(amp, theta)});
    }
    std::vector<cplx> spectrum(grid.size());
    kernels::fill_frequency(
        grid,
        [&](double xi, double eta) -> cplx {
            const double rho = std::hypot(xi, eta) / center;
            if (rho == 0.0) return 0.0;
            const double w = smoothstep5(1.0 - std::abs(std::log2(rho)) / log_width);
            if (w == 0.0) return 0.0;
            cplx acc = 0.0;
            for (const Atom& a : list) acc += a.weight * std::polar(1.0, -(xi * a.x + eta * a.y));
            return w * acc;
        },
        spectrum);
    return ifft(Field(grid, std::move(spectrum), Space::frequency));
}

std::vector<TestInput> standard_family(const GridSpec& grid, int k, std::uint32_t seed) {
    const double s = std::ldexp(1.0, k);
    std::vector<TestInput> out;
    for (double r : {1.5, 3.0, 6.0}) {
        const AnalyticField f = bump({0.0, 0.0}, r * s);
        out.push_back({f.label, sample(grid, f)});
    }
    for (double a : {0.25, 1.0}) {
        const AnalyticField f = gaussian(a / (s * s));
        out.push_back({f.label, sample(grid, f)});
    }
    for (double sigma : {0.5, 1.0, 2.0}) {
        for (double theta : {0.0, 0.7}) {
            const cplx zeta0 = std::polar(1.0 / s, theta);
            out.push_back({"packet:" + fmt(sigma * s) + "," + fmt(theta),
                           wave_packet(grid, {0.0, 0.0}, sigma * s, zeta0)});
        }
    }
    const int m = static_cast<int>(std::lround(1.0 / (s * grid.freq_spacing())));
    const int d = static_cast<int>(std::lround(m / std::numbers::sqrt2));
    out.push_back({"exp:" + std::to_string(m) + ",0", lattice_exponential(grid, m, 0)});
    out.push_back({"exp:" + std::to_string(d) + "," + std::to_string(d),
                   lattice_exponential(grid, d, d)});
    Rng rng(seed);
    for (int i = 0; i < 4; ++i) {
        out.push_back({"random:" + std::to_string(seed) + "#" + std::to_string(i),
                       random_band_limited(grid, 1.0 / s, 4.0 * s, rng)});
    }
    return out;
}

std::vector<TestInput> parse_inputs(const std::string& label, const GridSpec& grid,
                                    std::uint32_t seed) {
    if (label.rfind("standard:", 0) == 0) {
        const auto args = parse_reals(label.substr(9), label);
        if (args.size() != 1) throw Error("standard family label is standard:k");
        return standard_family(grid, integer_arg(args[0], label), seed);
    }
    return {{label, make_input(label, grid, seed)}};
}

Field make_input(const std::string& label, const GridSpec& grid, std::uint32_t seed) {
    if (label == "noise") {
        Rng rng(seed);
        std::vector<cplx> v(grid.size());
        for (cplx& c : v) {
            const double re = rng.uniform() - 0.5;
            c = {re, rng.uniform() - 0.5};
        }
        return Field(grid, std::move(v), Space::position);
    }
    if (label.rfind("bands:", 0) == 0) {
        const auto args = parse_reals(label.substr(6), label);
        if (args.empty()) throw Error("bands label needs at least one band index");
        Rng rng(seed);
        Field acc(grid, Space::position);
        for (double a : args) {
            const int k = integer_arg(a, label);
            const double s = std::ldexp(1.0, k);
            acc = acc + random_band_limited(grid, 1.0 / s, 4.0 * s, rng);
        }
        return acc;
    }
    if (label.rfind("ring:", 0) == 0) {
        const auto args = parse_reals(label.substr(5), label);
        if (args.size() != 1) throw Error("ring label is ring:k");
        const double radius = std::ldexp(1.0, -integer_arg(args[0], label));
        const double m = radius / grid.freq_spacing();
        if (std::abs(m - std::round(m)) > 1e-9) {
            throw Error("ring radius " + fmt(radius) + " is not a lattice frequency on this grid");
        }
        const int mi = static_cast<int>(std::lround(m));
        return lattice_exponential(grid, mi, 0) + lattice_exponential(grid, -mi, 0) +
               lattice_exponential(grid, 0, mi) + lattice_exponential(grid, 0, -mi);
    }
    return sample(grid, parse_field(label));
}

}  // namespace carlab
