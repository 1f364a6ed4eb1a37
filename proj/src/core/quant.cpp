// SPDX-License-Identifier: Apache-2.0
#include "quant.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>

#include "errors.hpp"
#include "rng.hpp"

namespace neurosim {

namespace {

constexpr char kMagic[4] = {'Q', 'M', '0', '1'};

void put_u32(std::ostream& os, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    return static_cast<std::uint32_t>(b[0]) | static_cast<std::uint32_t>(b[1]) << 8 |
           static_cast<std::uint32_t>(b[2]) << 16 | static_cast<std::uint32_t>(b[3]) << 24;
}

void put_f64(std::ostream& os, double v) {
    const std::uint64_t u = std::bit_cast<std::uint64_t>(v);
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(u >> (8 * i));
    os.write(reinterpret_cast<const char*>(b), 8);
}

double get_f64(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t u = 0;
    for (int i = 0; i < 8; ++i) u |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return std::bit_cast<double>(u);
}

} // namespace

double default_scale(std::span<const double> values) {
    double max_abs = 0.0;
    for (double v : values) max_abs = std::max(max_abs, std::fabs(v));
    return max_abs > 0.0 ? max_abs / 127.0 : 1.0;
}

QuantMatrix quantize_stochastic(std::span<const double> m, std::uint32_t rows,
                                std::uint32_t cols, double scale, std::uint64_t rng_seed) {
    if (!(scale > 0.0)) throw InvalidScale("quantize_stochastic: scale must be > 0");
    if (m.size() != std::size_t(rows) * cols)
        throw std::invalid_argument("quantize_stochastic: size mismatch");

    SeededRng rng(rng_seed);
    QuantMatrix out;
    out.rows = rows;
    out.cols = cols;
    out.scale = scale;
    out.data.resize(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        const double q = m[i] / scale;
        double lo = std::floor(q);
        const double frac = q - lo;
        double v = lo + (rng.uniform() < frac ? 1.0 : 0.0);
        v = std::clamp(v, -128.0, 127.0);
        out.data[i] = static_cast<std::int8_t>(v);
    }
    return out;
}

std::vector<std::int8_t> requantize_relu(std::span<const std::int32_t> acc,
                                         double in_scale, double out_scale) {
    if (!(in_scale > 0.0) || !(out_scale > 0.0))
        throw InvalidScale("requantize_relu: scales must be > 0");
    const double f = in_scale / out_scale;
    std::vector<std::int8_t> out(acc.size());
    for (std::size_t j = 0; j < acc.size(); ++j) {
        const std::int32_t rectified = std::max(acc[j], 0);
        double v = std::nearbyint(static_cast<double>(rectified) * f); // RNE under default mode
        v = std::clamp(v, 0.0, 127.0);
        out[j] = static_cast<std::int8_t>(v);
    }
    return out;
}

void qm01_write(std::ostream& os, const QuantMatrix& m) {
    os.write(kMagic, 4);
    put_u32(os, m.rows);
    put_u32(os, m.cols);
    put_f64(os, m.scale);
    os.write(reinterpret_cast<const char*>(m.data.data()),
             static_cast<std::streamsize>(m.data.size()));
    if (!os) throw IoError("qm01_write: stream failure");
}

QuantMatrix qm01_read(std::istream& is) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0) throw IoError("qm01_read: bad magic");
    QuantMatrix m;
    m.rows = get_u32(is);
    m.cols = get_u32(is);
    m.scale = get_f64(is);
    if (!is) throw IoError("qm01_read: truncated header");
    if (!(m.scale > 0.0)) throw InvalidScale("qm01_read: scale must be > 0");
    const std::uint64_t count = std::uint64_t(m.rows) * m.cols;
    if (m.rows == 0 || m.cols == 0 || count > (1u << 26))
        throw IoError("qm01_read: unreasonable dimensions");
    m.data.resize(count);
    is.read(reinterpret_cast<char*>(m.data.data()), static_cast<std::streamsize>(count));
    if (static_cast<std::uint64_t>(is.gcount()) != count) throw IoError("qm01_read: truncated payload");
    return m;
}

void qm01_save(const std::string& path, const QuantMatrix& m) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open for write: " + path);
    qm01_write(os, m);
}

QuantMatrix qm01_load(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open for read: " + path);
    return qm01_read(is);
}

} // namespace neurosim
