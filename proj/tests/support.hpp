#pragma once

#include <algorithm>
#include <cmath>

#include "carlab/grid.hpp"
#include "carlab/norms.hpp"

namespace testing {

inline double max_diff(const carlab::Field& a, const carlab::Field& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.grid().size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline double rel_l2(const carlab::Field& a, const carlab::Field& b) {
    return carlab::lp_norm(a - b, 2.0) / carlab::lp_norm(b, 2.0);
}

inline double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace testing
