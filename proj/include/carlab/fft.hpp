#pragma once

#include "carlab/grid.hpp"

namespace carlab {

/// Continuum-calibrated forward transform:
///   F(xi, eta) ~ integral f(x, y) exp(-i(x xi + y eta)) dx dy,
/// realized as h^2 times the centered discrete sum. The result lives in
/// frequency space on the lattice Delta*(j - n/2).
Field fft(const Field& field);

/// Inverse of fft: (1/2pi)^2 times the lattice sum with weight Delta^2,
/// so ifft(fft(f)) == f up to rounding.
Field ifft(const Field& field);

}  // namespace carlab
