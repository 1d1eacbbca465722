#include "carlab/spectral.hpp"

#include <cmath>
#include <sstream>

#include "carlab/error.hpp"
#include "carlab/fft.hpp"
#include "carlab/kernels.hpp"

namespace carlab {

const char* to_string(CutoffProfile p) {
    return p == CutoffProfile::quintic_smoothstep ? "quintic_smoothstep" : "exp_mollifier";
}

CutoffProfile parse_profile(const std::string& name) {
    if (name == "quintic_smoothstep" || name == "quintic") return CutoffProfile::quintic_smoothstep;
    if (name == "exp_mollifier" || name == "exp") return CutoffProfile::exp_mollifier;
    throw Error("unknown cutoff profile '" + name + "' (quintic_smoothstep | exp_mollifier)");
}

double smoothstep5(double s) {
    if (s <= 0.0) return 0.0;
    if (s >= 1.0) return 1.0;
    return s * s * s * (10.0 + s * (-15.0 + 6.0 * s));
}

double exp_transition(double s) {
    if (s <= 0.0) return 0.0;
    if (s >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / s);
    const double b = std::exp(-1.0 / (1.0 - s));
    return a / (a + b);
}

double cutoff_value(const MultiplierSpec& spec, double radius) {
    const double s = (radius - spec.delta) / spec.delta;
    return spec.profile == CutoffProfile::quintic_smoothstep ? smoothstep5(s) : exp_transition(s);
}

LPFamily::LPFamily(int k_min, int k_max) : k_min_(k_min), k_max_(k_max) {
    if (k_min > k_max) {
        std::ostringstream os;
        os << "dyadic family needs k_min <= k_max (got " << k_min << " > " << k_max << ")";
        throw Error(os.str());
    }
}

double LPFamily::phi(double r) { return 1.0 - smoothstep5(r - 1.0); }

DyadicBand LPFamily::band(int k) const {
    if (!contains(k)) {
        std::ostringstream os;
        os << "band k=" << k << " outside family range [" << k_min_ << ", " << k_max_ << "]";
        throw Error(os.str());
    }
    return {k, std::ldexp(1.0, -k - 1), std::ldexp(1.0, -k + 1)};
}

double LPFamily::chi(int k, double radius) const {
    band(k);
    return phi(std::ldexp(radius, k)) - phi(std::ldexp(radius, k + 1));
}

double LPFamily::partial_sum(double radius) const {
    double s = 0.0;
    for (int k = k_min_; k <= k_max_; ++k) s += chi(k, radius);
    return s;
}

double LPFamily::covered_inner() const { return std::ldexp(1.0, -k_max_); }
double LPFamily::covered_outer() const { return std::ldexp(1.0, -k_min_); }

LPFamily lp_family(int k_min, int k_max) { return LPFamily(k_min, k_max); }

bool spectral_band_resolvable(const GridSpec& grid, const DyadicBand& band) {
    const double d = grid.freq_spacing();
    return band.inner >= 2.0 * d && band.outer <= d * (grid.n() / 2);
}

bool kernel_band_resolvable(const GridSpec& grid, const DyadicBand& band) {
    const double d = grid.freq_spacing();
    return band.inner >= 2.0 * d && band.outer <= d * (grid.n() / 4);
}

namespace {

Field frequency_field(const GridSpec& grid, const PointFn& fn) {
    std::vector<cplx> values(grid.size());
    kernels::fill_frequency(grid, fn, values);
    return Field(grid, std::move(values), Space::frequency);
}

void require_position(const Field& f, const char* op) {
    if (f.space() != Space::position) {
        throw Error(std::string(op) + " expects a position-space field");
    }
}

}  // namespace

Field cr_symbol(const GridSpec& grid) {
    return frequency_field(grid, [](double xi, double eta) { return cplx{-eta, xi}; });
}

Field psi_delta(const MultiplierSpec& spec, const GridSpec& grid) {
    if (!(spec.delta > 0.0)) throw Error("cutoff scale delta must be positive");
    return frequency_field(grid, [spec](double xi, double eta) -> cplx {
        return cutoff_value(spec, std::hypot(xi, eta));
    });
}

Field chi_symbol(const LPFamily& family, int k, const GridSpec& grid) {
    family.band(k);
    return frequency_field(grid, [&family, k](double xi, double eta) -> cplx {
        return family.chi(k, std::hypot(xi, eta));
    });
}

Field t_symbol(const MultiplierSpec& spec, const GridSpec& grid) {
    if (!(spec.delta > 0.0)) throw Error("cutoff scale delta must be positive");
    return frequency_field(grid, [spec](double xi, double eta) -> cplx {
        const double r = std::hypot(xi, eta);
        if (r == 0.0) return 0.0;
        return cutoff_value(spec, r) / cplx{-eta, xi};
    });
}

Field tk_symbol(const MultiplierSpec& spec, const LPFamily& family, int k, const GridSpec& grid) {
    family.band(k);
    if (!(spec.delta > 0.0)) throw Error("cutoff scale delta must be positive");
    return frequency_field(grid, [spec, &family, k](double xi, double eta) -> cplx {
        const double r = std::hypot(xi, eta);
        if (r == 0.0) return 0.0;
        return family.chi(k, r) * cutoff_value(spec, r) / cplx{-eta, xi};
    });
}

Field apply_multiplier(const Field& field, const Field& symbol) {
    require_position(field, "apply_multiplier");
    if (symbol.space() != Space::frequency || !(symbol.grid() == field.grid())) {
        throw Error("multiplier symbol must be a frequency field on the same grid");
    }
    return ifft(fft(field) * symbol);
}

Field apply_dbar(const Field& field) {
    require_position(field, "apply_dbar");
    return apply_multiplier(field, 0.5 * cr_symbol(field.grid()));
}

Field apply_cr(const Field& field) {
    require_position(field, "apply_cr");
    return apply_multiplier(field, cr_symbol(field.grid()));
}

Field apply_T(const Field& field, const MultiplierSpec& spec) {
    require_position(field, "apply_T");
    return apply_multiplier(field, t_symbol(spec, field.grid()));
}

Field apply_Tk(const Field& field, const MultiplierSpec& spec, const LPFamily& family, int k) {
    require_position(field, "apply_Tk");
    return apply_multiplier(field, tk_symbol(spec, family, k, field.grid()));
}

Field lp_project(const Field& field, const LPFamily& family, int k) {
    require_position(field, "lp_project");
    return apply_multiplier(field, chi_symbol(family, k, field.grid()));
}

Field square_function(const Field& field, const LPFamily& family) {
    require_position(field, "square_function");
    const Field spectrum = fft(field);
    std::vector<double> acc(field.grid().size(), 0.0);
    for (int k = family.k_min(); k <= family.k_max(); ++k) {
        const Field hk = ifft(spectrum * chi_symbol(family, k, field.grid()));
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += std::norm(hk[i]);
    }
    std::vector<cplx> out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) out[i] = std::sqrt(acc[i]);
    return Field(field.grid(), std::move(out), Space::position);
}

Field kernel_Tk(const MultiplierSpec& spec, const LPFamily& family, int k, const GridSpec& grid) {
    const DyadicBand b = family.band(k);
    if (!kernel_band_resolvable(grid, b)) {
        std::ostringstream os;
        os << "band k=" << k << " [" << b.inner << ", " << b.outer
           << "] is not resolvable for a kernel on this grid (needs inner >= "
           << 2.0 * grid.freq_spacing() << " and outer <= " << grid.freq_spacing() * (grid.n() / 4)
           << ")";
        throw Error(os.str());
    }
    return ifft(tk_symbol(spec, family, k, grid));
}

Field cauchy_solve(const Field& field, const MultiplierSpec& spec) {
    require_position(field, "cauchy_solve");
    return apply_multiplier(field, 2.0 * t_symbol(spec, field.grid()));
}

Field convolve(const Field& kernel, const Field& h) {
    require_position(kernel, "convolve");
    require_position(h, "convolve");
    if (!(kernel.grid() == h.grid())) throw Error("convolution of fields on different grids");
    return ifft(fft(kernel) * fft(h));
}

double uncovered_energy_fraction(const Field& h, const LPFamily& family) {
    require_position(h, "uncovered_energy_fraction");
    const Field spectrum = fft(h);
    const GridSpec& g = h.grid();
    const double inner = family.covered_inner();
    const double outer = family.covered_outer();
    double total = 0.0;
    double outside = 0.0;
    for (int iy = 0; iy < g.n(); ++iy) {
        for (int ix = 0; ix < g.n(); ++ix) {
            const double e = std::norm(spectrum(ix, iy));
            const double r = std::hypot(g.freq(ix), g.freq(iy));
            total += e;
            if (r < inner || r > outer) outside += e;
        }
    }
    return total > 0.0 ? outside / total : 0.0;
}

Field spectral_coarsen(const Field& field) {
    require_position(field, "spectral_coarsen");
    const GridSpec& fine = field.grid();
    const GridSpec coarse = make_grid(fine.n() / 2, fine.half_width());
    const Field spectrum = fft(field);
    const int nc = coarse.n();
    const int offset = fine.n() / 4;
    std::vector<cplx> values(coarse.size());
    for (int iy = 0; iy < nc; ++iy) {
        for (int ix = 0; ix < nc; ++ix) {
            values[static_cast<std::size_t>(iy) * nc + ix] = spectrum(ix + offset, iy + offset);
        }
    }
    return ifft(Field(coarse, std::move(values), Space::frequency));
}

}  // namespace carlab
