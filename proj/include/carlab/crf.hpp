#pragma once

#include <filesystem>
#include <iosfwd>

#include "carlab/grid.hpp"

namespace carlab {

// CRF1 binary field format:
//   8 bytes   magic "CRFIELD1"
//   u32 LE    n
//   f64 LE    L
//   u8        space (0 = position, 1 = frequency)
//   n*n * 2 * f64 LE   interleaved (re, im), row-major, y slow

void write_crf(std::ostream& os, const Field& field);
Field read_crf(std::istream& is);

/// Writes through a temporary file and renames it into place.
void save_crf(const std::filesystem::path& path, const Field& field);
Field load_crf(const std::filesystem::path& path);

}  // namespace carlab
