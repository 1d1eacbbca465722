#include "carlab/dbar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "carlab/error.hpp"
#include "carlab/fft.hpp"
#include "carlab/kernels.hpp"
#include "carlab/norms.hpp"
#include "carlab/rng.hpp"

namespace carlab {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// Unchecked restricted norm: samples with |z| < inner or |z| > outer are
// skipped.
double region_norm(const Field& f, double p, double inner, double outer) {
    RadialWeight w;
    w.exclusion_radius = inner;
    w.ball_radius = outer;
    const double h = f.grid().spacing();
    return std::pow(h * h * kernels::sum_weighted_abs_pow(f.values(), f.grid(), p, w), 1.0 / p);
}

Field conj(const Field& f) {
    std::vector<cplx> v(f.values().begin(), f.values().end());
    for (cplx& c : v) c = std::conj(c);
    return Field(f.grid(), std::move(v), f.space());
}

struct CauchyMap {
    Field potential;
    Field symbol;
    const Field* mask;

    Field apply(const Field& h) const {
        Field out = ifft(fft(potential * h) * symbol);
        return mask ? *mask * out : out;
    }
    Field adjoint(const Field& g) const {
        const Field in = mask ? *mask * g : g;
        return conj(potential) * ifft(fft(in) * conj(symbol));
    }
};

}  // namespace

double estimate_contraction(const Field& potential, const MultiplierSpec& spec, const Field* mask,
                            int iterations, std::uint32_t seed) {
    const GridSpec& g = potential.grid();
    if (mask && !(mask->grid() == g)) throw Error("mask and potential live on different grids");
    const CauchyMap map{potential, 2.0 * t_symbol(spec, g), mask};
    Rng rng(seed);
    std::vector<cplx> v(g.size());
    for (cplx& c : v) {
        const double re = rng.uniform() - 0.5;
        c = {re, rng.uniform() - 0.5};
    }
    Field x(g, std::move(v), Space::position);
    double norm = lp_norm(x, 2.0);
    x = (1.0 / norm) * x;
    double estimate = 0.0;
    for (int i = 0; i < iterations; ++i) {
        Field y = map.adjoint(map.apply(x));
        norm = lp_norm(y, 2.0);
        if (norm == 0.0) return 0.0;
        estimate = std::sqrt(norm);
        x = (1.0 / norm) * y;
    }
    return estimate;
}

DbarSolution picard_solve(const Potential& v, const Field& seed, const MultiplierSpec& spec,
                          const PicardOptions& options) {
    const GridSpec& g = seed.grid();
    if (seed.space() != Space::position) throw Error("Picard seed must be a position-space field");
    if (options.mask && !(options.mask->grid() == g)) throw Error("mask lives on another grid");
    if (options.max_iter < 1) throw Error("max_iter must be at least 1");
    const double margin = options.interior_margin < 0.0 ? g.half_width() / 4 : options.interior_margin;
    if (!(margin < g.half_width())) throw Error("interior margin leaves no interior");
    const double interior = g.half_width() - margin;

    const Field potential = sample(g, v);
    const Field* mask = options.mask ? &*options.mask : nullptr;
    DbarSolution sol{.u = seed, .potential = potential, .seed = seed, .potential_label = v.label};
    sol.interior_margin = margin;
    sol.contraction_estimate =
        estimate_contraction(potential, spec, mask, options.power_iterations, options.power_seed);
    if (sol.contraction_estimate > kContractionLimit) {
        throw ContractionError("operator-norm estimate " + fmt(sol.contraction_estimate) +
                                   " of h -> cauchy_solve(V h) exceeds " + fmt(kContractionLimit) +
                                   "; Picard iteration refused",
                               sol.contraction_estimate);
    }

    const CauchyMap map{potential, 2.0 * t_symbol(spec, g), mask};
    Field u = seed;
    bool converged = false;
    for (int m = 1; m <= options.max_iter; ++m) {
        Field next = seed + map.apply(u);
        const double change = lp_norm(next - u, 2.0);
        const double size = lp_norm(next, 2.0);
        const double rel = size > 0.0 ? change / size : change;
        if (!sol.update_norms.empty() && change > sol.update_norms.back() * (1 + 1e-12) &&
            sol.update_norms.back() > 0.0) {
            sol.monotone_updates = false;
        }
        sol.update_norms.push_back(change);
        u = std::move(next);
        sol.iterations = m;
        if (rel <= options.tol) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw ConvergenceError("Picard iteration did not reach tol " + fmt(options.tol) + " in " +
                                   std::to_string(options.max_iter) + " iterations (last update " +
                                   fmt(sol.update_norms.back()) + ")",
                               sol.iterations);
    }

    const double u_norm = region_norm(u, 2.0, 0.0, interior);
    const Field defect = u - seed - map.apply(u);
    const Field du = apply_dbar(u);
    if (u_norm > 0.0) {
        sol.residual = region_norm(apply_dbar(defect), 2.0, 0.0, interior) / u_norm;
        sol.equation_residual = region_norm(du - potential * u, 2.0, 0.0, interior) / u_norm;
    }
    const double seed_norm = lp_norm(seed, 2.0);
    if (seed_norm > 0.0) sol.seed_defect = lp_norm(apply_dbar(seed), 2.0) / seed_norm;
    sol.u = std::move(u);
    return sol;
}

WitnessReport inequality_witness(const Field& u, const Potential& v, double slack,
                                 double interior_radius) {
    const GridSpec& g = u.grid();
    const Field du = apply_dbar(u);
    const Field vu = sample(g, v) * u;
    WitnessReport rep;
    rep.slack = slack;
    rep.max_violation = -INFINITY;
    for (int iy = 0; iy < g.n(); ++iy) {
        for (int ix = 0; ix < g.n(); ++ix) {
            const cplx z = g.point(ix, iy);
            if (std::abs(z) > interior_radius) continue;
            const double lhs = std::abs(du(ix, iy));
            const double rhs = std::abs(vu(ix, iy));
            if (lhs - rhs > rep.max_violation) {
                rep.max_violation = lhs - rhs;
                rep.worst_point = z;
                rep.worst_lhs = lhs;
                rep.worst_rhs = rhs;
            }
        }
    }
    rep.pass = rep.max_violation <= slack;
    return rep;
}

Potential scale_transform(const Potential& v, double lambda, double half_width) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw Error("scale factor must be positive");
    Potential out;
    out.label = v.label + "@" + fmt(lambda);
    const ComplexFn base = v.value;
    out.value = [base, lambda](cplx z) { return lambda * base(lambda * z); };
    out.l2_norm_exact = v.l2_norm_exact;
    if (v.support_radius) {
        out.support_radius = *v.support_radius / lambda;
        out.support_center = v.support_center / lambda;
        const double reach = std::max(std::abs(out.support_center.real()),
                                      std::abs(out.support_center.imag())) +
                             *out.support_radius;
        if (reach > half_width) {
            throw Error("rescaled support of " + v.label + " reaches " + fmt(reach) +
                        ", outside the box half-width " + fmt(half_width));
        }
    }
    return out;
}

BootstrapTrace uc_bootstrap(const Field& u, const Potential& v, const Exponents& exponents,
                            double r, std::span<const double> t_values,
                            const EmpiricalConstant& c_hat, const std::string& c_hat_provenance,
                            double exclusion_radius) {
    const GridSpec& g = u.grid();
    if (t_values.empty()) throw Error("bootstrap needs at least one t value");
    if (!(r > 0.0)) throw Error("ball radius must be positive");
    if (exclusion_radius < 2.0 * g.spacing()) {
        throw Error("exclusion radius " + fmt(exclusion_radius) + " is below 2h = " +
                    fmt(2.0 * g.spacing()));
    }
    check_vanishes_on_disk(u, exclusion_radius);

    BootstrapTrace tr;
    tr.r = r;
    tr.exclusion_radius = exclusion_radius;
    tr.c_hat = c_hat.value;
    tr.c_hat_provenance = c_hat_provenance;
    tr.q = exponents.q();
    tr.cell_measure = g.spacing() * g.spacing();
    const Field potential = sample(g, v);
    tr.v_ball_norm = region_norm(potential, 2.0, 0.0, r);
    tr.absorption_margin = 0.5 - tr.c_hat * tr.v_ball_norm;
    if (tr.absorption_margin <= 0.0) {
        tr.r_too_large = true;
        return tr;
    }

    for (double t : t_values) {
        RadialWeight w;
        w.t = t;
        w.scale = r;
        w.exclusion_radius = exclusion_radius;
        w.ball_radius = r;
        const double a = weighted_lp_norm(u, exponents.q(), w);
        if (!std::isfinite(a)) throw Error("non-finite A(t) at t = " + fmt(t));
        tr.a_series.emplace_back(t, a);
    }
    tr.rhs_bound = 2.0 * tr.c_hat * region_norm(apply_dbar(u), exponents.p(), r, INFINITY);
    double a_max = 0.0;
    for (const auto& [t, a] : tr.a_series) a_max = std::max(a_max, a);
    tr.bounded = a_max <= tr.rhs_bound * (1.0 + kBoundSlack);

    const double t_max = tr.a_series.back().first;
    bool diverging = false;
    for (std::size_t i = 0; i + 1 < tr.a_series.size(); ++i) {
        const auto [t0, a0] = tr.a_series[i];
        const auto [t1, a1] = tr.a_series[i + 1];
        if (t0 < t_max / 2) continue;
        const double ratio = a0 > 0.0 ? a1 / a0 : 0.0;
        tr.growth_ratios.push_back(ratio);
        diverging = true;
    }
    for (double ratio : tr.growth_ratios) diverging = diverging && ratio >= kDivergenceRatio;
    tr.geometric_divergence = diverging;
    return tr;
}

SupBound vanishing_detector(const BootstrapTrace& trace, double r_inner) {
    if (trace.a_series.size() < 3) throw Error("vanishing detector needs at least three t values");
    if (!(trace.absorption_margin > 0.0)) throw Error("vanishing detector needs a positive absorption margin");
    if (!(r_inner > 0.0) || !(r_inner < trace.r)) throw Error("inner radius must lie in (0, r)");
    SupBound out;
    out.value = INFINITY;
    const double cell = std::pow(trace.cell_measure, 1.0 / trace.q);
    for (const auto& [t, a] : trace.a_series) {
        const double b = a * std::pow(r_inner / trace.r, t) / cell;
        out.per_t.emplace_back(t, b);
        if (b < out.value) {
            out.value = b;
            out.t_at_min = t;
        }
    }
    return out;
}

double ball_sup(const Field& u, double radius) {
    const GridSpec& g = u.grid();
    double best = 0.0;
    for (int iy = 0; iy < g.n(); ++iy) {
        for (int ix = 0; ix < g.n(); ++ix) {
            if (std::abs(g.point(ix, iy)) <= radius) best = std::max(best, std::abs(u(ix, iy)));
        }
    }
    return best;
}

DbarSolution vanishing_solution(const Potential& v, const GridSpec& grid,
                                const MultiplierSpec& spec, double clear_radius, double ramp,
                                PicardOptions options) {
    if (!(clear_radius > 0.0) || !(ramp > 0.0)) throw Error("clear radius and ramp must be positive");
    const Field mask = sample(grid, [=](cplx z) -> cplx {
        return smoothstep5((std::abs(z) - clear_radius) / ramp);
    });
    options.mask = mask;
    DbarSolution sol = picard_solve(v, mask, spec, options);
    for (int iy = 0; iy < grid.n(); ++iy) {
        for (int ix = 0; ix < grid.n(); ++ix) {
            const cplx z = grid.point(ix, iy);
            if (std::abs(z) < clear_radius && std::abs(sol.u(ix, iy)) > 1e-10) {
                throw Error("constructed solution is not zero at (" + fmt(z.real()) + ", " +
                            fmt(z.imag()) + ")");
            }
        }
    }
    return sol;
}

double largest_absorbing_radius(const Potential& v, const GridSpec& grid, double c_hat) {
    const Field potential = sample(grid, v);
    auto margin = [&](double r) { return 0.5 - c_hat * region_norm(potential, 2.0, 0.0, r); };
    const double L = grid.half_width();
    if (margin(L) > 0.0) return L;
    double lo = 0.0, hi = L;
    if (margin(grid.spacing()) <= 0.0) return 0.0;
    lo = grid.spacing();
    for (int i = 0; i < 60 && hi - lo > 1e-12 * L; ++i) {
        const double mid = 0.5 * (lo + hi);
        (margin(mid) > 0.0 ? lo : hi) = mid;
    }
    return lo;
}

}  // namespace carlab
