#pragma once

#include <string>

#include "carlab/grid.hpp"

namespace carlab {

enum class CutoffProfile { quintic_smoothstep, exp_mollifier };

const char* to_string(CutoffProfile p);
CutoffProfile parse_profile(const std::string& name);

/// Radial low-frequency cutoff psi_delta: 0 on |zeta| <= delta, 1 on
/// |zeta| >= 2 delta, monotone in between with the chosen profile.
struct MultiplierSpec {
    double delta = 0.0;
    CutoffProfile profile = CutoffProfile::quintic_smoothstep;
};

/// 6s^5 - 15s^4 + 10s^3 clamped to [0, 1].
double smoothstep5(double s);
/// C-infinity transition e(s)/(e(s) + e(1 - s)), e(s) = exp(-1/s).
double exp_transition(double s);
double cutoff_value(const MultiplierSpec& spec, double radius);

/// Frequency annulus [2^(-k-1), 2^(-k+1)] carrying chi_k.
struct DyadicBand {
    int k;
    double inner;
    double outer;
};

/// Telescoped Littlewood-Paley family chi_k(zeta) = phi(2^k r) - phi(2^(k+1) r),
/// r = |zeta|, with phi = 1 on r <= 1, 0 on r >= 2, quintic in between.
/// chi_k peaks at r = 2^-k and sum_{k_min..k_max} chi_k = 1 exactly on
/// [2^-k_max, 2^-k_min].
class LPFamily {
public:
    LPFamily(int k_min, int k_max);

    int k_min() const noexcept { return k_min_; }
    int k_max() const noexcept { return k_max_; }
    bool contains(int k) const noexcept { return k >= k_min_ && k <= k_max_; }
    DyadicBand band(int k) const;
    double chi(int k, double radius) const;
    double partial_sum(double radius) const;
    double covered_inner() const;
    double covered_outer() const;

    static double phi(double r);

private:
    int k_min_;
    int k_max_;
};

LPFamily lp_family(int k_min, int k_max);

/// Band is inside the lattice: inner >= 2 Delta, outer <= Delta n/2.
bool spectral_band_resolvable(const GridSpec& grid, const DyadicBand& band);
/// Stricter position-side condition for kernels: outer <= Delta n/4.
bool kernel_band_resolvable(const GridSpec& grid, const DyadicBand& band);

// Symbols on the frequency lattice.
Field cr_symbol(const GridSpec& grid);
Field psi_delta(const MultiplierSpec& spec, const GridSpec& grid);
Field chi_symbol(const LPFamily& family, int k, const GridSpec& grid);
/// psi_delta / (-eta + i xi), 0 at zeta = 0.
Field t_symbol(const MultiplierSpec& spec, const GridSpec& grid);
Field tk_symbol(const MultiplierSpec& spec, const LPFamily& family, int k, const GridSpec& grid);

/// ifft(symbol * fft(field)).
Field apply_multiplier(const Field& field, const Field& symbol);

Field apply_dbar(const Field& field);
Field apply_cr(const Field& field);
Field apply_T(const Field& field, const MultiplierSpec& spec);
Field apply_Tk(const Field& field, const MultiplierSpec& spec, const LPFamily& family, int k);
Field lp_project(const Field& field, const LPFamily& family, int k);
/// Pointwise (sum_k |h_k|^2)^(1/2); real-valued, stored as complex.
Field square_function(const Field& field, const LPFamily& family);
/// Position-space kernel of T_k; throws if the band fails
/// kernel_band_resolvable.
Field kernel_Tk(const MultiplierSpec& spec, const LPFamily& family, int k, const GridSpec& grid);
/// ifft(2 psi_delta h^ / (-eta + i xi)): right inverse of dbar up to the
/// psi_delta filter.
Field cauchy_solve(const Field& field, const MultiplierSpec& spec);

/// Periodic convolution (K * h)(z) = integral K(z - w) h(w) dw on the box.
Field convolve(const Field& kernel, const Field& h);

/// Fraction of the spectral L2 energy of h outside the family's covered
/// annulus.
double uncovered_energy_fraction(const Field& h, const LPFamily& family);

/// Same-box field on the n/2 grid keeping lattice frequencies |m| < n/4.
/// Exact for inputs band-limited below the coarse Nyquist radius.
Field spectral_coarsen(const Field& field);

}  // namespace carlab
