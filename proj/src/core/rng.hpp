// SPDX-License-Identifier: Apache-2.0
//
// Seeded RNG used everywhere results must be byte-reproducible. mt19937_64
// output is fixed by the standard; the std::*_distribution adapters are not,
// so the variate transforms live here instead.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace neurosim {

class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Box-Muller; one stashed variate.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    std::int8_t int8_uniform() {
        return static_cast<std::int8_t>(static_cast<std::int32_t>(engine_() % 256u) - 128);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace neurosim
