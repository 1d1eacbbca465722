#pragma once

#include <cstdint>
#include <random>

namespace carlab {

/// Seeded generator with a portable uniform draw: 53-bit doubles built
/// from two 32-bit Mersenne Twister outputs (a >> 5, b >> 6), which is
/// reproducible across standard libraries.
class Rng {
public:
    explicit Rng(std::uint32_t seed) : engine_(seed) {}

    double uniform() {
        const std::uint32_t a = engine_() >> 5;
        const std::uint32_t b = engine_() >> 6;
        return (a * 67108864.0 + b) / 9007199254740992.0;
    }

private:
    std::mt19937 engine_;
};

}  // namespace carlab
