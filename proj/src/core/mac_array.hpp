// SPDX-License-Identifier: Apache-2.0
//
// Bit-exact functional model of the 4x16 int8 MAC array with structural
// cycle accounting for tiled vector-matrix multiplication.
//
// The array consumes 16 operand-A values and 4 operand-B values per clock
// and performs 64 MACs per cycle; results are 29-bit accumulators held in
// 32-bit storage. Structurally the model charges 16 feed cycles per
// 16-row x 4-column tile (one 16-wide column of operand A per cycle):
//
//   tile_cycles = ceil(N/4) * ceil(D/16) * 16
//
// Partial tiles are zero-padded: padding contributes nothing to the sums
// and full cycles to the timing. The fitted end-to-end polynomial that also
// covers Arm-side pre/post-processing lives in cost_model.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "quant.hpp"

namespace neurosim {
namespace mac {

constexpr int kArrayRows = 4;   // operand B feed width (output columns per tile)
constexpr int kArrayCols = 16;  // operand A feed width (input rows per tile)
constexpr std::int32_t kAccMax = (1 << 28) - 1; // 29-bit signed range
constexpr std::int32_t kAccMin = -(1 << 28);

// A tiled vector-matrix multiply request: operand A is the int8 input vector
// of length d, operand B the d x n int8 weight matrix.
struct MacJob {
    std::span<const std::int8_t> operand_a;
    const QuantMatrix* operand_b = nullptr;
    std::uint32_t d = 0;
    std::uint32_t n = 0;
};

struct MacResult {
    std::vector<std::int32_t> acc; // length n, each value within 29 bits
    std::uint64_t tile_cycles = 0;
};

struct Tile {
    std::uint32_t row_begin, row_end; // [begin, end) over D
    std::uint32_t col_begin, col_end; // [begin, end) over N
};

// Partition of the D x N index space into at most 16x4 blocks,
// column-block-major then row-block.
std::vector<Tile> tile_schedule(std::uint32_t d, std::uint32_t n);

std::uint64_t tile_cycles(std::uint32_t d, std::uint32_t n);

// acc[j] = sum_i a[i] * B[i][j], exact integer arithmetic. Throws
// OverflowError if any accumulator exits the 29-bit signed range.
MacResult mac_multiply(const MacJob& job);

// Convenience wrapper building the job from raw pieces.
MacResult mac_multiply(std::span<const std::int8_t> a, const QuantMatrix& b);

} // namespace mac
} // namespace neurosim
