#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "carlab/family.hpp"
#include "carlab/grid.hpp"
#include "carlab/spectral.hpp"
#include "carlab/zoo.hpp"

namespace carlab {

enum class SweepAxis { t, k, delta, none };
enum class CapProvenance { analytic, refinement_oracle };

const char* to_string(SweepAxis a);
const char* to_string(CapProvenance p);

struct SweepPoint {
    double axis = 0.0;
    double ratio = 0.0;
    std::string witness;
};

/// Largest observed ratio over a sweep, with the input that produced it.
struct EmpiricalConstant {
    std::string name;
    double value = 0.0;
    std::string witness;
    SweepAxis axis = SweepAxis::none;
    std::vector<SweepPoint> series;

    static EmpiricalConstant from_series(std::string name, SweepAxis axis,
                                         std::vector<SweepPoint> series);
};

struct Bound {
    EmpiricalConstant constant;
    double cap = 0.0;
    CapProvenance provenance = CapProvenance::analytic;

    bool holds() const { return constant.value <= cap; }
};

struct VerificationReport {
    std::string check;
    nlohmann::json parameters = nlohmann::json::object();
    std::vector<Bound> bounds;
    /// Measured constants that carry no cap of their own.
    std::vector<EmpiricalConstant> observations;
    std::map<std::string, double> metrics;
    std::vector<std::string> notes;
    bool pass = false;

    void add_bound(EmpiricalConstant c, double cap, CapProvenance provenance);
    /// Single-value bound without a sweep.
    void add_scalar(const std::string& name, double value, double cap, CapProvenance provenance);
    /// pass = every constant <= its cap.
    void finalize();
    const Bound& bound(const std::string& name) const;
};

/// Calibrated cap from a coarse-grid run.
inline constexpr double kCalibrationFactor = 1.25;

// Carleman estimate -------------------------------------------------------

/// || |z|^-t f ||_q / || |z|^-t dbar f ||_p with the closed-form dbar.
double carleman_ratio(const AnalyticField& f, double t, const Exponents& exponents,
                      const GridSpec& grid);

/// Ratio series over t. Without a cap, one is calibrated by rerunning the
/// sweep on the n/2 grid (cap = 1.25 * coarse max). Also bounds the
/// least-squares slope of log R over the last three t values by 0.05.
VerificationReport carleman_sweep(const AnalyticField& f, std::span<const double> t_values,
                                  const Exponents& exponents, const GridSpec& grid,
                                  std::optional<double> cap = std::nullopt);

/// || dbar(z^-t f) - z^-t dbar f ||_2 / || z^-t dbar f ||_2, spectral dbar
/// on the left, closed form on the right.
double commutation_residual(const AnalyticField& f, double t, const GridSpec& grid);

// Multiplier / kernel bounds ---------------------------------------------

inline constexpr double kMinkowskiSlack = 1e-9;
inline constexpr double kYoungSlack = 1e-6;
inline constexpr double kHolderSlack = 1e-9;

/// sqrt(2 pi ln 4): L2 norm of 1/|zeta| over any annulus a <= |zeta| <= 4a.
double annulus_cap();

/// Frequency-side ||psi_delta chi_k / (-eta + i xi)||_2 against
/// annulus_cap() * 1.05.
VerificationReport kernel_l2_bound(const MultiplierSpec& spec, const LPFamily& family, int k,
                                   const GridSpec& grid);
/// kernel_l2_bound over several k plus the pairwise spread (<= 2%).
VerificationReport kernel_bound_sweep(const MultiplierSpec& spec, const LPFamily& family,
                                      std::span<const int> ks, const GridSpec& grid);

/// ||K * h||_q <= ||K||_2 ||h||_p (1 + 1e-6) with periodic convolution.
VerificationReport young_check(const Field& kernel, const Field& h, const Exponents& exponents);

// Operator ratios ----------------------------------------------------------

/// max over inputs of ||T_k h||_q / ||h||_p.
EmpiricalConstant tk_operator_ratio(const MultiplierSpec& spec, const LPFamily& family, int k,
                                    const Exponents& exponents,
                                    std::span<const TestInput> inputs);

using FamilyBuilder = std::function<std::vector<TestInput>(int k)>;

/// tk_operator_ratio across ks; passes if max/min - 1 <= 10%.
VerificationReport tk_uniformity(const MultiplierSpec& spec, const LPFamily& family,
                                 std::span<const int> ks, const Exponents& exponents,
                                 const FamilyBuilder& build_family);

/// Full operator T over a delta sweep; passes if max/min - 1 <= 15%.
VerificationReport t_operator_ratio(const Exponents& exponents, std::span<const TestInput> inputs,
                                    std::span<const double> deltas,
                                    CutoffProfile profile = CutoffProfile::quintic_smoothstep);

// Littlewood-Paley chain ----------------------------------------------------

/// Caps for the three non-exact links of the chain.
struct ChainCaps {
    double lp_upper = 0.0;
    double young = 0.0;
    double lp_lower = 0.0;
};

/// Leakage above this fraction of spectral energy is rejected.
inline constexpr double kLeakageTolerance = 1e-10;

/// The six quantities of the chain
///   ||sum T_k h||_q, ||(sum |T_k h|^2)^1/2||_q, (sum ||T_k h||_q^2)^1/2,
///   (sum ||h_k||_p^2)^1/2, ||(sum |h_k|^2)^1/2||_p, ||sum h_k||_p
/// and the five adjacent ratios. The Minkowski links are capped at
/// 1 + 1e-9; the others use the given caps or, if absent, 1.25 times the
/// same ratio on the spectrally coarsened input.
VerificationReport lp_chain_report(const Field& h, const MultiplierSpec& spec,
                                   const LPFamily& family, const Exponents& exponents,
                                   std::optional<ChainCaps> caps = std::nullopt);

// Hoelder absorption step -----------------------------------------------------

/// || |z|^-t V u ||_{p,B(0,r)} <= ||V||_{2,B(0,r)} || |z|^-t u ||_{q,B(0,r)}.
VerificationReport holder_gap_check(const Potential& v, const Field& u, double t, double r,
                                    const Exponents& exponents, double exclusion_radius);

}  // namespace carlab
