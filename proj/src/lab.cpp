#include "carlab/lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "carlab/error.hpp"
#include "carlab/fft.hpp"
#include "carlab/norms.hpp"

namespace carlab {

const char* to_string(SweepAxis a) {
    switch (a) {
        case SweepAxis::t: return "t";
        case SweepAxis::k: return "k";
        case SweepAxis::delta: return "delta";
        case SweepAxis::none: break;
    }
    return "none";
}

const char* to_string(CapProvenance p) {
    return p == CapProvenance::analytic ? "analytic" : "refinement_oracle";
}

EmpiricalConstant EmpiricalConstant::from_series(std::string name, SweepAxis axis,
                                                 std::vector<SweepPoint> series) {
    if (series.empty()) throw Error("empirical constant '" + name + "' has an empty series");
    EmpiricalConstant c;
    c.name = std::move(name);
    c.axis = axis;
    auto best = std::max_element(series.begin(), series.end(),
                                 [](const SweepPoint& a, const SweepPoint& b) {
                                     // NaN never wins silently: treat it as +inf.
                                     const double ra = std::isnan(a.ratio) ? INFINITY : a.ratio;
                                     const double rb = std::isnan(b.ratio) ? INFINITY : b.ratio;
                                     return ra < rb;
                                 });
    c.value = std::isnan(best->ratio) ? INFINITY : best->ratio;
    c.witness = best->witness;
    c.series = std::move(series);
    return c;
}

void VerificationReport::add_bound(EmpiricalConstant c, double cap, CapProvenance provenance) {
    bounds.push_back({std::move(c), cap, provenance});
}

void VerificationReport::add_scalar(const std::string& name, double value, double cap,
                                    CapProvenance provenance) {
    add_bound(EmpiricalConstant::from_series(name, SweepAxis::none, {{0.0, value, name}}), cap,
              provenance);
}

void VerificationReport::finalize() {
    pass = std::all_of(bounds.begin(), bounds.end(), [](const Bound& b) { return b.holds(); });
}

const Bound& VerificationReport::bound(const std::string& name) const {
    for (const Bound& b : bounds) {
        if (b.constant.name == name) return b;
    }
    throw Error("report '" + check + "' has no bound named '" + name + "'");
}

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

nlohmann::json grid_json(const GridSpec& g) {
    return {{"n", g.n()}, {"L", g.half_width()}, {"h", g.spacing()}, {"Delta", g.freq_spacing()}};
}

nlohmann::json exponents_json(const Exponents& e) { return {{"p", e.p()}, {"q", e.q()}}; }

nlohmann::json spec_json(const MultiplierSpec& s) {
    return {{"delta", s.delta}, {"profile", to_string(s.profile)}};
}

bool is_integer(double t) { return t == std::round(t); }

void require_sweepable(const AnalyticField& f, double t, const GridSpec& grid) {
    if (!std::isfinite(t) || t < 0.0) throw Error("weight exponent t must be finite and >= 0");
    if (t > 0.0) {
        const double clearance = f.origin_clearance();
        if (clearance < 2.0 * grid.spacing()) {
            throw Error("support of " + f.label + " reaches the exclusion disk (clearance " +
                        fmt(clearance) + " < 2h = " + fmt(2.0 * grid.spacing()) + ")");
        }
    }
    if (!is_integer(t) && !f.avoids_slit()) {
        throw Error("non-integer t = " + fmt(t) + " needs " + f.label +
                    " supported away from the branch cut x <= 0, y = 0");
    }
}

double ratio_of(double num, double den) {
    if (den == 0.0) return num == 0.0 ? 0.0 : INFINITY;
    return num / den;
}

double least_squares_slope(std::span<const double> x, std::span<const double> y) {
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxx > 0.0 ? sxy / sxx : 0.0;
}

double spread_of(const EmpiricalConstant& c) {
    double lo = INFINITY, hi = 0.0;
    for (const SweepPoint& p : c.series) {
        lo = std::min(lo, p.ratio);
        hi = std::max(hi, p.ratio);
    }
    if (lo == 0.0) return hi == 0.0 ? 0.0 : INFINITY;
    return hi / lo - 1.0;
}

std::vector<double> carleman_series(const AnalyticField& f, std::span<const double> t_values,
                                    const Exponents& e, const GridSpec& grid) {
    std::vector<double> out;
    out.reserve(t_values.size());
    for (double t : t_values) out.push_back(carleman_ratio(f, t, e, grid));
    return out;
}

GridSpec coarse_grid(const GridSpec& g) {
    if (g.n() / 2 < 16) throw Error("grid too small for a coarse calibration run (n/2 < 16)");
    return make_grid(g.n() / 2, g.half_width());
}

}  // namespace

// ---------------------------------------------------------------------------

double carleman_ratio(const AnalyticField& f, double t, const Exponents& exponents,
                      const GridSpec& grid) {
    require_sweepable(f, t, grid);
    const double rho0 = t > 0.0 ? f.origin_clearance() : 0.0;
    const double num = weighted_lp_norm(sample(grid, f), exponents.q(), t, rho0);
    const double den = weighted_lp_norm(sample_dbar(grid, f), exponents.p(), t, rho0);
    if (den < kVanishTol) {
        throw Error("weighted norm of dbar " + f.label + " vanishes (" + fmt(den) +
                    "); a nonzero compactly supported field cannot be holomorphic, check sampling");
    }
    return num / den;
}

VerificationReport carleman_sweep(const AnalyticField& f, std::span<const double> t_values,
                                  const Exponents& exponents, const GridSpec& grid,
                                  std::optional<double> cap) {
    if (t_values.empty()) throw Error("carleman sweep needs at least one t value");
    for (double t : t_values) require_sweepable(f, t, grid);

    VerificationReport rep;
    rep.check = "carleman_sweep";
    rep.parameters = {{"grid", grid_json(grid)},
                      {"exponents", exponents_json(exponents)},
                      {"function", f.label},
                      {"t", std::vector<double>(t_values.begin(), t_values.end())}};

    const std::vector<double> ratios = carleman_series(f, t_values, exponents, grid);
    std::vector<SweepPoint> series;
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        if (!std::isfinite(ratios[i])) throw Error("non-finite Carleman ratio at t = " + fmt(t_values[i]));
        series.push_back({t_values[i], ratios[i], f.label + " @ t=" + fmt(t_values[i])});
    }

    CapProvenance provenance = CapProvenance::analytic;
    double cap_value = 0.0;
    if (cap) {
        cap_value = *cap;
        rep.notes.push_back("cap supplied by caller");
    } else {
        const GridSpec coarse = coarse_grid(grid);
        const std::vector<double> coarse_ratios = carleman_series(f, t_values, exponents, coarse);
        const double coarse_max = *std::max_element(coarse_ratios.begin(), coarse_ratios.end());
        cap_value = kCalibrationFactor * coarse_max;
        provenance = CapProvenance::refinement_oracle;
        rep.metrics["coarse_n"] = coarse.n();
        rep.metrics["coarse_max_ratio"] = coarse_max;
    }
    rep.metrics["min_ratio"] = *std::min_element(ratios.begin(), ratios.end());
    rep.metrics["max_ratio"] = *std::max_element(ratios.begin(), ratios.end());

    // Trivial envelope: on a support inside a <= |z| <= b the weight moves
    // each norm by at most (b/a)^t.
    if (f.support_radius && f.origin_clearance() > 0.0) {
        const double a = f.origin_clearance();
        const double b = std::abs(f.support_center) + *f.support_radius;
        const double r0 = carleman_ratio(f, 0.0, exponents, grid);
        int violations = 0;
        for (std::size_t i = 0; i < ratios.size(); ++i) {
            const double env = std::pow(b / a, t_values[i]);
            if (ratios[i] > r0 * env * (1 + 1e-12) || ratios[i] < r0 / env * (1 - 1e-12)) ++violations;
        }
        rep.metrics["envelope_violations"] = violations;
    }

    rep.add_bound(EmpiricalConstant::from_series("carleman_ratio", SweepAxis::t, std::move(series)),
                  cap_value, provenance);

    if (t_values.size() >= 3) {
        std::vector<double> ts(t_values.end() - 3, t_values.end());
        std::vector<double> logs;
        for (std::size_t i = ratios.size() - 3; i < ratios.size(); ++i) logs.push_back(std::log(ratios[i]));
        const double slope = least_squares_slope(ts, logs);
        rep.add_scalar("tail_log_slope", slope, 0.05, CapProvenance::analytic);
    } else {
        rep.notes.push_back("fewer than three t values: divergence slope not evaluated");
    }
    rep.finalize();
    return rep;
}

double commutation_residual(const AnalyticField& f, double t, const GridSpec& grid) {
    if (!std::isfinite(t) || t < 0.0) throw Error("weight exponent t must be finite and >= 0");
    if (!is_integer(t) && !f.avoids_slit()) {
        throw Error("non-integer t = " + fmt(t) + " needs " + f.label +
                    " supported away from the branch cut x <= 0, y = 0");
    }
    if (t > 0.0 && !(f.origin_clearance() > 0.0)) {
        throw Error("support of " + f.label + " contains the origin, where z^-t is singular");
    }
    const AnalyticField weighted = product(power_weight(t), f);
    const Field spectral = apply_dbar(sample(grid, weighted));
    const Field oracle = sample(grid, [&](cplx z) -> cplx {
        if (f.support_radius && std::abs(z - f.support_center) >= *f.support_radius) return 0.0;
        return std::pow(z, -t) * f.dbar(z);
    });
    const double den = lp_norm(oracle, 2.0);
    if (den < kVanishTol) throw Error("closed-form dbar of " + f.label + " vanishes");
    return lp_norm(spectral - oracle, 2.0) / den;
}

double annulus_cap() { return std::sqrt(2.0 * std::numbers::pi * std::log(4.0)); }

namespace {

void require_spectral_band(const LPFamily& family, int k, const GridSpec& grid) {
    const DyadicBand b = family.band(k);
    if (!spectral_band_resolvable(grid, b)) {
        std::ostringstream os;
        os << "band k=" << k << " [" << b.inner << ", " << b.outer
           << "] is not resolvable on this grid (needs inner >= " << 2.0 * grid.freq_spacing()
           << " and outer <= " << grid.nyquist() << ")";
        throw Error(os.str());
    }
}

double kernel_value(const MultiplierSpec& spec, const LPFamily& family, int k,
                    const GridSpec& grid) {
    require_spectral_band(family, k, grid);
    return lp_norm(tk_symbol(spec, family, k, grid), 2.0);
}

}  // namespace

VerificationReport kernel_l2_bound(const MultiplierSpec& spec, const LPFamily& family, int k,
                                   const GridSpec& grid) {
    const int ks[] = {k};
    VerificationReport rep = kernel_bound_sweep(spec, family, ks, grid);
    rep.check = "kernel_l2_bound";
    return rep;
}

VerificationReport kernel_bound_sweep(const MultiplierSpec& spec, const LPFamily& family,
                                      std::span<const int> ks, const GridSpec& grid) {
    if (ks.empty()) throw Error("kernel bound needs at least one k");
    std::vector<std::string> unresolved;
    for (int k : ks) {
        try {
            require_spectral_band(family, k, grid);
        } catch (const Error& e) {
            unresolved.push_back(e.what());
        }
    }
    if (!unresolved.empty()) {
        std::string msg = "unresolved bands:";
        for (const auto& u : unresolved) msg += "\n  " + u;
        throw Error(msg);
    }

    VerificationReport rep;
    rep.check = "kernel_bound_sweep";
    rep.parameters = {{"grid", grid_json(grid)},
                      {"multiplier", spec_json(spec)},
                      {"family", {{"k_min", family.k_min()}, {"k_max", family.k_max()}}},
                      {"k", std::vector<int>(ks.begin(), ks.end())}};
    std::vector<SweepPoint> series;
    for (int k : ks) {
        series.push_back({double(k), kernel_value(spec, family, k, grid), "k=" + std::to_string(k)});
        const DyadicBand b = family.band(k);
        if (spec.delta * 2.0 > b.inner) {
            rep.notes.push_back("k=" + std::to_string(k) +
                                ": cutoff overlaps the band (2 delta > inner radius)");
        }
    }
    rep.metrics["annulus_cap"] = annulus_cap();
    EmpiricalConstant c = EmpiricalConstant::from_series("kernel_l2", SweepAxis::k, std::move(series));
    const double spread = spread_of(c);
    rep.add_bound(std::move(c), annulus_cap() * 1.05, CapProvenance::analytic);
    if (ks.size() > 1) rep.add_scalar("k_spread", spread, 0.02, CapProvenance::analytic);
    rep.finalize();
    return rep;
}

VerificationReport young_check(const Field& kernel, const Field& h, const Exponents& exponents) {
    if (!(kernel.grid() == h.grid())) throw Error("young_check: kernel and h live on different grids");
    const double lhs = lp_norm(convolve(kernel, h), exponents.q());
    const double k2 = lp_norm(kernel, 2.0);
    const double hp = lp_norm(h, exponents.p());
    const double ratio = ratio_of(lhs, k2 * hp);

    VerificationReport rep;
    rep.check = "young_check";
    rep.parameters = {{"grid", grid_json(h.grid())}, {"exponents", exponents_json(exponents)}};
    rep.metrics["lhs"] = lhs;
    rep.metrics["kernel_l2"] = k2;
    rep.metrics["h_lp"] = hp;
    rep.add_scalar("young_ratio", ratio, 1.0 + kYoungSlack, CapProvenance::analytic);
    rep.finalize();
    return rep;
}

EmpiricalConstant tk_operator_ratio(const MultiplierSpec& spec, const LPFamily& family, int k,
                                    const Exponents& exponents,
                                    std::span<const TestInput> inputs) {
    if (inputs.empty()) throw Error("operator ratio needs a nonempty test family");
    const GridSpec& grid = inputs.front().field.grid();
    const DyadicBand b = family.band(k);
    if (!kernel_band_resolvable(grid, b)) {
        std::ostringstream os;
        os << "band k=" << k << " [" << b.inner << ", " << b.outer
           << "] is not resolvable on this grid (needs inner >= " << 2.0 * grid.freq_spacing()
           << " and outer <= " << grid.freq_spacing() * (grid.n() / 4) << ")";
        throw Error(os.str());
    }
    const Field symbol = tk_symbol(spec, family, k, grid);
    std::vector<SweepPoint> series;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        const TestInput& in = inputs[i];
        if (!(in.field.grid() == grid)) throw Error("test family member " + in.label + " is on another grid");
        const double den = lp_norm(in.field, exponents.p());
        if (den < kVanishTol) throw Error("test family member " + in.label + " has zero norm");
        const double num = lp_norm(apply_multiplier(in.field, symbol), exponents.q());
        series.push_back({double(i), num / den, in.label});
    }
    return EmpiricalConstant::from_series("tk_ratio k=" + std::to_string(k), SweepAxis::none,
                                          std::move(series));
}

VerificationReport tk_uniformity(const MultiplierSpec& spec, const LPFamily& family,
                                 std::span<const int> ks, const Exponents& exponents,
                                 const FamilyBuilder& build_family) {
    if (ks.empty()) throw Error("dyadic uniformity needs at least one k");
    VerificationReport rep;
    rep.check = "tk_uniformity";
    std::vector<SweepPoint> series;
    std::size_t members = 0;
    std::optional<GridSpec> grid;
    for (int k : ks) {
        const std::vector<TestInput> inputs = build_family(k);
        if (!inputs.empty()) grid = inputs.front().field.grid();
        members = std::max(members, inputs.size());
        EmpiricalConstant c = tk_operator_ratio(spec, family, k, exponents, inputs);
        series.push_back({double(k), c.value, "k=" + std::to_string(k) + " " + c.witness});
        rep.observations.push_back(std::move(c));
    }
    rep.parameters = {{"grid", grid_json(*grid)},
                      {"exponents", exponents_json(exponents)},
                      {"multiplier", spec_json(spec)},
                      {"family", {{"k_min", family.k_min()}, {"k_max", family.k_max()}}},
                      {"k", std::vector<int>(ks.begin(), ks.end())},
                      {"family_size", members}};
    if (members < 2) rep.notes.push_back("weak coverage: test family has a single member");
    rep.notes.push_back("uniformity checked over the listed k only");
    EmpiricalConstant c = EmpiricalConstant::from_series("tk_ratio", SweepAxis::k, std::move(series));
    const double spread = spread_of(c);
    rep.metrics["k_spread"] = spread;
    rep.observations.push_back(std::move(c));
    rep.add_scalar("k_spread", spread, 0.10, CapProvenance::analytic);
    rep.finalize();
    return rep;
}

VerificationReport t_operator_ratio(const Exponents& exponents, std::span<const TestInput> inputs,
                                    std::span<const double> deltas, CutoffProfile profile) {
    if (deltas.empty()) throw Error("delta sweep needs at least one delta");
    if (inputs.empty()) throw Error("operator ratio needs a nonempty test family");
    const GridSpec& grid = inputs.front().field.grid();
    std::vector<double> norms;
    for (const TestInput& in : inputs) {
        if (!(in.field.grid() == grid)) throw Error("test family member " + in.label + " is on another grid");
        const double den = lp_norm(in.field, exponents.p());
        if (den < kVanishTol) throw Error("test family member " + in.label + " has zero norm");
        norms.push_back(den);
    }
    std::vector<Field> spectra;
    for (const TestInput& in : inputs) spectra.push_back(fft(in.field));

    VerificationReport rep;
    rep.check = "t_operator_ratio";
    rep.parameters = {{"grid", grid_json(grid)},
                      {"exponents", exponents_json(exponents)},
                      {"profile", to_string(profile)},
                      {"delta", std::vector<double>(deltas.begin(), deltas.end())},
                      {"family_size", inputs.size()}};
    std::vector<SweepPoint> series;
    for (double delta : deltas) {
        const Field symbol = t_symbol({delta, profile}, grid);
        double best = -1.0;
        std::string witness;
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            const double r = lp_norm(ifft(spectra[i] * symbol), exponents.q()) / norms[i];
            if (r > best) {
                best = r;
                witness = inputs[i].label;
            }
        }
        series.push_back({delta, best, "delta=" + fmt(delta) + " " + witness});
    }
    if (inputs.size() < 2) rep.notes.push_back("weak coverage: test family has a single member");
    rep.notes.push_back("non-growth shown over a finite delta sweep; the delta -> 0 limit is not taken");
    const auto smallest = std::min_element(series.begin(), series.end(),
                                           [](const SweepPoint& a, const SweepPoint& b) { return a.axis < b.axis; });
    const auto largest = std::max_element(series.begin(), series.end(),
                                          [](const SweepPoint& a, const SweepPoint& b) { return a.axis < b.axis; });
    rep.metrics["small_delta_growth"] = smallest->ratio / largest->ratio - 1.0;
    EmpiricalConstant c = EmpiricalConstant::from_series("t_ratio", SweepAxis::delta, std::move(series));
    const double spread = spread_of(c);
    rep.observations.push_back(std::move(c));
    rep.add_scalar("delta_spread", spread, 0.15, CapProvenance::analytic);
    rep.finalize();
    return rep;
}

namespace {

struct Chain {
    double q[6] = {};
};

const char* const kLinkNames[5] = {"lp_upper", "minkowski_q", "young", "minkowski_p", "lp_lower"};

void require_covered(const Field& h, const LPFamily& family) {
    const double leak = uncovered_energy_fraction(h, family);
    if (leak > kLeakageTolerance) {
        std::ostringstream os;
        os << "input carries " << leak << " of its spectral energy outside the covered annulus ["
           << family.covered_inner() << ", " << family.covered_outer() << "]";
        throw LeakageError(os.str(), leak);
    }
}

Chain chain_quantities(const Field& h, const MultiplierSpec& spec, const LPFamily& family,
                       const Exponents& e) {
    const GridSpec& g = h.grid();
    const Field spectrum = fft(h);
    const std::size_t size = g.size();
    std::vector<cplx> sum_t(size), sum_h(size);
    std::vector<double> sq_t(size, 0.0), sq_h(size, 0.0);
    double norms_t = 0.0, norms_h = 0.0;
    for (int k = family.k_min(); k <= family.k_max(); ++k) {
        const Field tk = ifft(spectrum * tk_symbol(spec, family, k, g));
        const Field hk = ifft(spectrum * chi_symbol(family, k, g));
        for (std::size_t i = 0; i < size; ++i) {
            sum_t[i] += tk[i];
            sum_h[i] += hk[i];
            sq_t[i] += std::norm(tk[i]);
            sq_h[i] += std::norm(hk[i]);
        }
        norms_t += std::pow(lp_norm(tk, e.q()), 2);
        norms_h += std::pow(lp_norm(hk, e.p()), 2);
    }
    auto root_field = [&](const std::vector<double>& v) {
        std::vector<cplx> out(size);
        for (std::size_t i = 0; i < size; ++i) out[i] = std::sqrt(v[i]);
        return Field(g, std::move(out), Space::position);
    };
    Chain c;
    c.q[0] = lp_norm(Field(g, sum_t, Space::position), e.q());
    c.q[1] = lp_norm(root_field(sq_t), e.q());
    c.q[2] = std::sqrt(norms_t);
    c.q[3] = std::sqrt(norms_h);
    c.q[4] = lp_norm(root_field(sq_h), e.p());
    c.q[5] = lp_norm(Field(g, sum_h, Space::position), e.p());
    return c;
}

}  // namespace

VerificationReport lp_chain_report(const Field& h, const MultiplierSpec& spec,
                                   const LPFamily& family, const Exponents& exponents,
                                   std::optional<ChainCaps> caps) {
    const GridSpec& grid = h.grid();
    require_covered(h, family);
    for (int k = family.k_min(); k <= family.k_max(); ++k) require_spectral_band(family, k, grid);

    VerificationReport rep;
    rep.check = "lp_chain";
    rep.parameters = {{"grid", grid_json(grid)},
                      {"exponents", exponents_json(exponents)},
                      {"multiplier", spec_json(spec)},
                      {"family", {{"k_min", family.k_min()}, {"k_max", family.k_max()}}}};

    const Chain fine = chain_quantities(h, spec, family, exponents);
    const char* const qnames[6] = {"norm_sum_Tk_h_q",  "square_fn_Tk_h_q",  "l2_of_Tk_h_q",
                                   "l2_of_hk_p",       "square_fn_hk_p",    "norm_sum_hk_p"};
    for (int i = 0; i < 6; ++i) rep.metrics[qnames[i]] = fine.q[i];

    double link_caps[5] = {0.0, 1.0 + kMinkowskiSlack, 0.0, 1.0 + kMinkowskiSlack, 0.0};
    CapProvenance calibrated = CapProvenance::analytic;
    if (caps) {
        link_caps[0] = caps->lp_upper;
        link_caps[2] = caps->young;
        link_caps[4] = caps->lp_lower;
        rep.notes.push_back("chain caps supplied by caller");
    } else {
        const Field coarse = spectral_coarsen(h);
        require_covered(coarse, family);
        const Chain c = chain_quantities(coarse, spec, family, exponents);
        for (int i : {0, 2, 4}) {
            const double r = ratio_of(c.q[i], c.q[i + 1]);
            link_caps[i] = kCalibrationFactor * r;
            rep.metrics[std::string("coarse_") + kLinkNames[i]] = r;
        }
        rep.metrics["coarse_n"] = grid.n() / 2;
        calibrated = CapProvenance::refinement_oracle;
    }
    for (int i = 0; i < 5; ++i) {
        const bool exact = (i == 1 || i == 3);
        rep.add_scalar(kLinkNames[i], ratio_of(fine.q[i], fine.q[i + 1]), link_caps[i],
                       exact ? CapProvenance::analytic : calibrated);
    }
    rep.finalize();
    return rep;
}

VerificationReport holder_gap_check(const Potential& v, const Field& u, double t, double r,
                                    const Exponents& exponents, double exclusion_radius) {
    const GridSpec& grid = u.grid();
    if (!(r > 0.0) || r > grid.half_width()) {
        throw Error("ball radius r = " + fmt(r) + " must lie in (0, L]");
    }
    if (t > 0.0 && exclusion_radius < 2.0 * grid.spacing()) {
        throw Error("exclusion radius must be at least 2h when t > 0");
    }
    check_vanishes_on_disk(u, exclusion_radius);
    const Field vs = sample(grid, v);
    const RadialWeight w{t, 1.0, exclusion_radius, r, {0.0, 0.0}};
    const double lhs = weighted_lp_norm(vs * u, exponents.p(), w);
    const double v_ball = ball_lp_norm(vs, 2.0, r);
    const double u_ball = weighted_lp_norm(u, exponents.q(), w);
    const double ratio = ratio_of(lhs, v_ball * u_ball);

    VerificationReport rep;
    rep.check = "holder_gap";
    rep.parameters = {{"grid", grid_json(grid)},
                      {"exponents", exponents_json(exponents)},
                      {"potential", v.label},
                      {"t", t},
                      {"r", r},
                      {"exclusion_radius", exclusion_radius}};
    rep.metrics["V_l2_ball"] = v_ball;
    rep.metrics["lhs"] = lhs;
    rep.metrics["weighted_u_q_ball"] = u_ball;
    rep.add_scalar("holder_ratio", ratio, 1.0 + kHolderSlack, CapProvenance::analytic);
    rep.finalize();
    return rep;
}

}  // namespace carlab
