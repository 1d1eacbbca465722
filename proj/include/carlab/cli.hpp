#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace carlab {

/// Runs one carlab invocation. args excludes the program name.
/// Exit codes: 0 pass, 1 checked-property failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, used to name report files by config content.
std::uint64_t fnv1a(const std::string& bytes);

}  // namespace carlab
