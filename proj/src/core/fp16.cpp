// SPDX-License-Identifier: Apache-2.0
#include "fp16.hpp"

#include <bit>
#include <cstring>

namespace neurosim {

std::uint16_t float_to_half_bits(float value) {
    std::uint32_t f = std::bit_cast<std::uint32_t>(value);
    const std::uint16_t sign = static_cast<std::uint16_t>((f >> 16) & 0x8000u);
    const std::uint32_t exp = (f >> 23) & 0xFFu;
    std::uint32_t mant = f & 0x7FFFFFu;

    if (exp == 0xFFu) {
        // inf/NaN: no non-finite halves in stored weights
        return mant != 0 ? static_cast<std::uint16_t>(0)
                         : static_cast<std::uint16_t>(sign | 0x7BFFu);
    }

    // Unbiased exponent; half bias is 15, float bias 127.
    const int e = static_cast<int>(exp) - 127;
    if (e > 15) return static_cast<std::uint16_t>(sign | 0x7BFFu); // saturate to 65504

    if (e >= -14) {
        // Normal half. Keep 10 mantissa bits, round-to-nearest-even on the
        // 13 dropped bits.
        std::uint32_t half = static_cast<std::uint32_t>(e + 15) << 10 | (mant >> 13);
        const std::uint32_t rest = mant & 0x1FFFu;
        if (rest > 0x1000u || (rest == 0x1000u && (half & 1u))) {
            ++half; // carries across the exponent boundary correctly
        }
        if (half >= 0x7C00u) return static_cast<std::uint16_t>(sign | 0x7BFFu);
        return static_cast<std::uint16_t>(sign | half);
    }

    // Subnormal half (or zero). The 24-bit significand times 2^(e-23) must
    // land in units of 2^-24, i.e. shift right by (-e - 1) with RNE.
    if (e < -25) return sign; // below half the smallest subnormal
    mant |= 0x800000u;        // implicit leading 1
    const int drop = -e - 1;  // 14..24
    std::uint32_t half = mant >> drop;
    const std::uint32_t lost = mant & ((1u << drop) - 1u);
    const std::uint32_t halfway = 1u << (drop - 1);
    if (lost > halfway || (lost == halfway && (half & 1u))) ++half;
    return static_cast<std::uint16_t>(sign | half);
}

float half_bits_to_float(std::uint16_t bits) {
    const std::uint32_t sign = static_cast<std::uint32_t>(bits & 0x8000u) << 16;
    const std::uint32_t exp = (bits >> 10) & 0x1Fu;
    const std::uint32_t mant = bits & 0x3FFu;

    std::uint32_t f;
    if (exp == 0) {
        if (mant == 0) {
            f = sign;
        } else {
            // subnormal: normalize
            int e = -1;
            std::uint32_t m = mant;
            do {
                ++e;
                m <<= 1;
            } while ((m & 0x400u) == 0);
            f = sign | static_cast<std::uint32_t>(127 - 15 - e) << 23 | ((m & 0x3FFu) << 13);
        }
    } else if (exp == 0x1Fu) {
        f = sign | 0x7F800000u | (mant << 13);
    } else {
        f = sign | ((exp + 127 - 15) << 23) | (mant << 13);
    }
    return std::bit_cast<float>(f);
}

} // namespace neurosim
