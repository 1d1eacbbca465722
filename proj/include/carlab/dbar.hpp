#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carlab/grid.hpp"
#include "carlab/lab.hpp"
#include "carlab/spectral.hpp"
#include "carlab/zoo.hpp"

namespace carlab {

inline constexpr double kContractionLimit = 0.9;

struct PicardOptions {
    double tol = 1e-12;
    int max_iter = 100;
    /// Residuals are measured on |z| <= L - interior_margin; negative
    /// means L/4.
    double interior_margin = -1.0;
    /// Optional position-space multiplier applied after each Cauchy solve:
    /// u <- seed + mask * cauchy_solve(V u).
    std::optional<Field> mask;
    int power_iterations = 30;
    std::uint32_t power_seed = 1;
};

struct DbarSolution {
    Field u;
    Field potential;
    Field seed;
    std::string potential_label;
    int iterations = 0;
    /// ||dbar(u - seed - mask cauchy_solve(V u))|| / ||u|| on the interior
    /// disk: the defect of the discrete fixed point. Without a mask this is
    /// ||dbar u - dbar seed - psi_delta(V u)|| / ||u||.
    double residual = 0.0;
    /// ||dbar u - V u|| / ||u|| on the interior disk. Differs from the
    /// residual by the low frequencies the cutoff removes; on the torus the
    /// mean of V u can never be matched by dbar of a periodic field.
    double equation_residual = 0.0;
    /// ||dbar seed|| / ||seed||: how far the sampled seed is from holomorphic.
    double seed_defect = 0.0;
    double interior_margin = 0.0;
    double contraction_estimate = 0.0;
    std::vector<double> update_norms{};
    /// Update norms never increased after the first step.
    bool monotone_updates = true;
};

/// Power-iteration estimate of the L2 operator norm of
/// h -> mask * cauchy_solve(V h), using the adjoint symbol.
double estimate_contraction(const Field& potential, const MultiplierSpec& spec,
                            const Field* mask = nullptr, int iterations = 30,
                            std::uint32_t seed = 1);

/// Picard iteration from u_0 = seed. Throws ContractionError if the
/// operator-norm estimate exceeds 0.9 and ConvergenceError if max_iter is
/// reached.
DbarSolution picard_solve(const Potential& v, const Field& seed, const MultiplierSpec& spec,
                          const PicardOptions& options = {});

struct WitnessReport {
    bool pass = true;
    double slack = 0.0;
    /// max over the interior of |dbar u| - |V u|.
    double max_violation = 0.0;
    cplx worst_point{0.0, 0.0};
    double worst_lhs = 0.0;
    double worst_rhs = 0.0;
};

/// Pointwise |dbar u| <= |V u| + slack on |z| <= interior_radius, dbar
/// computed spectrally.
WitnessReport inequality_witness(const Field& u, const Potential& v, double slack,
                                 double interior_radius);

/// lambda V(lambda z). Throws if the rescaled support leaves the box.
Potential scale_transform(const Potential& v, double lambda, double half_width);

struct BootstrapTrace {
    double r = 0.0;
    double exclusion_radius = 0.0;
    double c_hat = 0.0;
    std::string c_hat_provenance;
    double v_ball_norm = 0.0;
    double absorption_margin = 0.0;
    bool r_too_large = false;
    /// (t, A(t)), A(t) = ||(r/|z|)^t u||_{q, B(0,r)}.
    std::vector<std::pair<double, double>> a_series;
    /// 2 C ||dbar u||_{p, outside B(0,r)}.
    double rhs_bound = 0.0;
    bool bounded = false;
    /// A(t+1)/A(t) over consecutive t >= t_max/2.
    std::vector<double> growth_ratios;
    bool geometric_divergence = false;
    double q = 0.0;
    double cell_measure = 0.0;
};

inline constexpr double kBoundSlack = 0.1;
inline constexpr double kDivergenceRatio = 1.5;

/// Absorption experiment on B(0, r). u must vanish on |z| < exclusion_radius
/// (>= 2h). The Carleman constant comes from a sweep report.
BootstrapTrace uc_bootstrap(const Field& u, const Potential& v, const Exponents& exponents,
                            double r, std::span<const double> t_values,
                            const EmpiricalConstant& c_hat, const std::string& c_hat_provenance,
                            double exclusion_radius);

struct SupBound {
    /// (t, A(t) (r_inner/r)^t / h^(2/q)).
    std::vector<std::pair<double, double>> per_t;
    double value = 0.0;
    double t_at_min = 0.0;
};

/// Certified sup |u| on B(0, r_inner) from the recorded A(t). Needs at
/// least three t values and a positive absorption margin.
SupBound vanishing_detector(const BootstrapTrace& trace, double r_inner);

/// max |u| over |z| <= radius on the grid.
double ball_sup(const Field& u, double radius);

/// Masked Picard solution that is zero on B(0, clear_radius): seed and mask
/// are smoothstep5((|z| - clear_radius)/ramp). Vanishing is verified to
/// 1e-10 on the clear disk.
DbarSolution vanishing_solution(const Potential& v, const GridSpec& grid,
                                const MultiplierSpec& spec, double clear_radius, double ramp,
                                PicardOptions options = {});

/// Largest r in (0, L] with 1/2 - c_hat ||V||_{2,B(0,r)} > 0, by bisection.
/// Returns 0 if no such r is found above the grid spacing.
double largest_absorbing_radius(const Potential& v, const GridSpec& grid, double c_hat);

}  // namespace carlab
