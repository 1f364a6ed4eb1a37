// SPDX-License-Identifier: Apache-2.0
//
// Conversion between real-valued weights/activations and the 8-bit integer
// domain: stochastic rounding for weights, saturating round-to-nearest-even
// requantization for ReLU activations. Symmetric per-tensor scheme,
// zero point fixed at 0 (real = scale * int).
#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace neurosim {

// Row-major signed int8 matrix with a single positive scale.
struct QuantMatrix {
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
    double scale = 1.0;
    std::vector<std::int8_t> data; // rows * cols entries

    std::int8_t at(std::uint32_t r, std::uint32_t c) const { return data[std::size_t(r) * cols + c]; }
    double real_at(std::uint32_t r, std::uint32_t c) const { return scale * at(r, c); }
};

// Default scale choice: full int8 range for the largest magnitude.
double default_scale(std::span<const double> values);

// Each x/scale rounds down with probability 1-frac and up with probability
// frac (frac = fractional part), so the expectation equals x/scale.
// Out-of-range results saturate to [-128, 127]. Deterministic in rng_seed.
// Throws InvalidScale for scale <= 0.
QuantMatrix quantize_stochastic(std::span<const double> m, std::uint32_t rows,
                                std::uint32_t cols, double scale, std::uint64_t rng_seed);

// ReLU + requantize into the next layer's activation scale:
//   out[j] = clamp(rne(max(acc[j], 0) * in_scale / out_scale), 0, 127)
std::vector<std::int8_t> requantize_relu(std::span<const std::int32_t> acc,
                                         double in_scale, double out_scale);

// QM01 weight blob: magic "QM01", u32 rows, u32 cols, f64 scale, int8
// payload row-major. All fields little-endian.
void qm01_write(std::ostream& os, const QuantMatrix& m);
QuantMatrix qm01_read(std::istream& is);

void qm01_save(const std::string& path, const QuantMatrix& m);
QuantMatrix qm01_load(const std::string& path);

} // namespace neurosim
