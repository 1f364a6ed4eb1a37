// SPDX-License-Identifier: Apache-2.0
//
// IEEE 754 binary16 storage type (1 sign, 5 exponent, 10 mantissa bits).
// Decoder weights are held in this format; arithmetic happens in double and
// values are rounded on store. Conversions are hand-rolled so results do not
// depend on compiler __fp16/_Float16 support.
#pragma once

#include <cstdint>

namespace neurosim {

// Round-to-nearest-even conversion. Values beyond +-65504 saturate to the
// largest finite half instead of producing inf (DecoderMatrix forbids
// non-finite entries); NaN input is mapped to 0.
std::uint16_t float_to_half_bits(float value);

float half_bits_to_float(std::uint16_t bits);

inline double half_round(double value) {
    return static_cast<double>(half_bits_to_float(float_to_half_bits(static_cast<float>(value))));
}

} // namespace neurosim
