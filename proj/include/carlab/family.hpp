#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "carlab/grid.hpp"
#include "carlab/rng.hpp"

namespace carlab {

struct TestInput {
    std::string label;
    Field field;
};

/// e^{i(xi x + eta y)} at lattice frequency (Delta mx, Delta my).
Field lattice_exponential(const GridSpec& grid, int mx, int my);

/// Gaussian packet exp(-|z - z0|^2 / (2 sigma^2)) e^{i zeta0 . z}.
Field wave_packet(const GridSpec& grid, cplx z0, double sigma, cplx zeta0);

/// Random band-limited field synthesized on the frequency lattice:
///   h^(zeta) = W(|zeta|/center) sum_a amp_a e^{i theta_a} e^{-i zeta . z_a}
/// with W(rho) = smoothstep5(1 - |log2 rho| / log_width). Atom positions
/// are uniform in [-spread, spread]^2. Draw order per atom: x, y, theta, amp.
Field random_band_limited(const GridSpec& grid, double center, double spread, Rng& rng,
                          int atoms = 6, double log_width = 0.35);

/// Test family adapted to dyadic band k (length scale s = 2^k): bumps,
/// gaussians, wave packets at |zeta| = 1/s, in-band lattice exponentials
/// and seeded random band-limited members. Members for different k are
/// dilations of each other in the continuum.
std::vector<TestInput> standard_family(const GridSpec& grid, int k, std::uint32_t seed);

/// Builds a named input field. Accepts function-zoo labels and the
/// synthetic labels
///   bands:k1,k2,...   random band-limited pieces centered at 2^-k_i
///   ring:k            four lattice exponentials on |zeta| = 2^-k
///   noise             white noise
std::vector<TestInput> parse_inputs(const std::string& label, const GridSpec& grid,
                                    std::uint32_t seed);
Field make_input(const std::string& label, const GridSpec& grid, std::uint32_t seed);

}  // namespace carlab
