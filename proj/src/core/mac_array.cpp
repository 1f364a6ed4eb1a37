// SPDX-License-Identifier: Apache-2.0
#include "mac_array.hpp"

#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace neurosim {
namespace mac {

std::vector<Tile> tile_schedule(std::uint32_t d, std::uint32_t n) {
    if (d < 1 || n < 1) throw std::invalid_argument("tile_schedule: d and n must be >= 1");
    std::vector<Tile> tiles;
    tiles.reserve(std::size_t((n + 3) / 4) * ((d + 15) / 16));
    for (std::uint32_t c = 0; c < n; c += kArrayRows) {
        for (std::uint32_t r = 0; r < d; r += kArrayCols) {
            tiles.push_back(Tile{r, std::min<std::uint32_t>(r + kArrayCols, d),
                                 c, std::min<std::uint32_t>(c + kArrayRows, n)});
        }
    }
    return tiles;
}

std::uint64_t tile_cycles(std::uint32_t d, std::uint32_t n) {
    const std::uint64_t col_blocks = (n + kArrayRows - 1) / kArrayRows;
    const std::uint64_t row_blocks = (d + kArrayCols - 1) / kArrayCols;
    return col_blocks * row_blocks * kArrayCols;
}

MacResult mac_multiply(const MacJob& job) {
    const QuantMatrix& b = *job.operand_b;
    if (job.operand_a.size() != job.d || b.rows != job.d || b.cols != job.n)
        throw std::invalid_argument("mac_multiply: operand shape mismatch");
    if (job.d < 1 || job.n < 1) throw std::invalid_argument("mac_multiply: d and n must be >= 1");

    // Exact 64-bit sums; order does not matter for the final value, so the
    // tile iteration only drives the cycle count.
    std::vector<std::int64_t> sums(job.n, 0);
    for (const Tile& t : tile_schedule(job.d, job.n)) {
        for (std::uint32_t j = t.col_begin; j < t.col_end; ++j) {
            std::int64_t s = 0;
            const std::int8_t* col = b.data.data() + j;
            for (std::uint32_t i = t.row_begin; i < t.row_end; ++i) {
                s += std::int64_t(job.operand_a[i]) * col[std::size_t(i) * b.cols];
            }
            sums[j] += s;
        }
    }

    MacResult out;
    out.acc.resize(job.n);
    for (std::uint32_t j = 0; j < job.n; ++j) {
        if (sums[j] > kAccMax || sums[j] < kAccMin) {
            throw OverflowError("mac_multiply: accumulator " + std::to_string(j) +
                                " = " + std::to_string(sums[j]) + " exceeds 29-bit range");
        }
        out.acc[j] = static_cast<std::int32_t>(sums[j]);
    }
    out.tile_cycles = tile_cycles(job.d, job.n);
    return out;
}

MacResult mac_multiply(std::span<const std::int8_t> a, const QuantMatrix& b) {
    MacJob job;
    job.operand_a = a;
    job.operand_b = &b;
    job.d = b.rows;
    job.n = b.cols;
    return mac_multiply(job);
}

} // namespace mac
} // namespace neurosim
