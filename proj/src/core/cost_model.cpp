// SPDX-License-Identifier: Apache-2.0
#include "cost_model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "mac_array.hpp"

namespace neurosim {
namespace cost {

KwsCycles kws_cycles(std::uint32_t n, std::uint32_t d, const KwsCoeffs& c) {
    if (n < 1 || d < 1) throw std::invalid_argument("kws_cycles: n and d must be >= 1");
    const double N = n, D = d;
    KwsCycles out;
    out.t_mm = c.mm_const + c.mm_n * N + c.mm_nd * N * D + c.mm_d * D;
    out.t_relu = c.relu_n * N + c.relu_const;
    out.t_total = out.t_mm + out.t_relu;
    return out;
}

AdaptiveCycles adaptive_cycles(std::uint32_t n, std::uint32_t d_in, std::uint32_t d_out,
                               double p, bool use_mac, const AdaptiveCoeffs& c) {
    if (n < 1 || d_in < 1 || d_out < 1)
        throw std::invalid_argument("adaptive_cycles: dimensions must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("adaptive_cycles: p must be in [0,1]");
    const double N = n, Din = d_in, Dout = d_out;
    AdaptiveCycles out;
    out.t_input = use_mac
                      ? c.i_mac_const + c.i_mac_n * N + c.i_mac_nd * N * Din + c.i_mac_d * Din
                      : c.i_nomac_const + c.i_nomac_n * N + c.i_nomac_nd * N * Din + c.i_nomac_d * Din;
    out.t_neuron = c.n_n * N + c.n_np * N * p + c.n_const;
    // P factored out so the event-based saving is exact in P.
    out.t_output = (c.o_ndp * Dout + c.o_np) * N * p;
    out.t_weight = (c.w_ndp * Dout + c.w_np) * N * p;
    out.t_total = out.t_input + out.t_neuron + out.t_output + out.t_weight;
    return out;
}

std::uint64_t kws_memory(std::uint32_t n, std::uint32_t d) {
    if (n < 1 || d < 1) throw std::invalid_argument("kws_memory: n and d must be >= 1");
    const std::uint64_t m_w = (std::uint64_t(d) + 1) * n; // int8 weights + biases
    const std::uint64_t m_i = 4ull * n;                   // int32 neuron inputs
    return m_w + m_i;
}

std::uint64_t adaptive_memory(std::uint32_t n, std::uint32_t d_in, std::uint32_t d_out) {
    if (n < 1 || d_in < 1 || d_out < 1)
        throw std::invalid_argument("adaptive_memory: dimensions must be >= 1");
    const std::uint64_t m_ib = (std::uint64_t(d_in) + 1) * n; // int8 encoder + bias
    const std::uint64_t m_o = 2ull * d_out * n;               // f16 decoder
    const std::uint64_t m_ic = 4ull * n;                      // int32 input currents
    const std::uint64_t m_n = 8ull * n;                       // LIF potential + refractory
    return m_ib + m_o + m_ic + m_n;
}

std::optional<std::uint32_t> max_dout(std::uint32_t n, std::uint32_t d_in,
                                      std::uint64_t budget_bytes) {
    if (n < 1 || d_in < 1) throw std::invalid_argument("max_dout: n and d_in must be >= 1");
    const std::uint64_t fixed = (std::uint64_t(d_in) + 1) * n + 12ull * n;
    if (fixed + 2ull * n > budget_bytes) return std::nullopt; // even d_out = 1 too big
    const std::uint64_t d = (budget_bytes - fixed) / (2ull * n);
    return static_cast<std::uint32_t>(std::min<std::uint64_t>(d, 0xFFFFFFFFull));
}

std::vector<FeasibilityCell> max_dout_map(const std::vector<std::uint32_t>& n_list,
                                          const std::vector<std::uint32_t>& d_in_list,
                                          std::uint64_t budget_bytes) {
    std::vector<FeasibilityCell> grid;
    grid.reserve(n_list.size() * d_in_list.size());
    for (std::uint32_t n : n_list) {
        for (std::uint32_t d_in : d_in_list) {
            FeasibilityCell cell;
            cell.n = n;
            cell.d_in = d_in;
            if (auto d = max_dout(n, d_in, budget_bytes); d && *d >= 1) {
                cell.max_d_out = *d;
                cell.feasible = true;
            }
            grid.push_back(cell);
        }
    }
    return grid;
}

double energy_uj(double cycles, double pj_per_cycle) {
    if (!(pj_per_cycle > 0.0)) throw std::invalid_argument("energy_uj: pj_per_cycle must be > 0");
    return cycles * pj_per_cycle * 1e-6;
}

double kws_inference_cycles_paper_network(const KwsCoeffs& c) {
    // Layer 1 split across two PEs of 128 neurons each, layer 2 on one PE.
    const double pe_l1 = kws_cycles(128, 390, c).t_total;
    const double pe_l2 = kws_cycles(256, 256, c).t_total;
    const double per_step = pe_l1 * 2 + pe_l2;
    return per_step * 10.0; // 10 time steps per inference
}

double calibrated_pj_per_cycle(const KwsCoeffs& c) {
    return kKwsEnergyPerInferenceUj * 1e6 / kws_inference_cycles_paper_network(c);
}

std::vector<StructuralFittedViolation> structural_fitted_violations(
    const std::vector<std::uint32_t>& n_list, const std::vector<std::uint32_t>& d_list,
    const KwsCoeffs& c) {
    std::vector<StructuralFittedViolation> out;
    for (std::uint32_t n : n_list) {
        for (std::uint32_t d : d_list) {
            const double structural = static_cast<double>(mac::tile_cycles(d, n));
            const double fitted = kws_cycles(n, d, c).t_mm;
            if (structural > fitted) out.push_back({n, d, structural, fitted});
        }
    }
    return out;
}

TmmFit fit_tmm_structural(const std::vector<std::uint32_t>& n_list,
                          const std::vector<std::uint32_t>& d_list) {
    if (n_list.empty() || d_list.empty())
        throw std::invalid_argument("fit_tmm_structural: empty grid");

    // Normal equations for y ~ c0 + c1 N + c2 N D + c3 D over the grid.
    std::array<std::array<double, 4>, 4> ata{};
    std::array<double, 4> aty{};
    for (std::uint32_t n : n_list) {
        for (std::uint32_t d : d_list) {
            const double y = static_cast<double>(mac::tile_cycles(d, n));
            const std::array<double, 4> x = {1.0, double(n), double(n) * d, double(d)};
            for (int i = 0; i < 4; ++i) {
                aty[i] += x[i] * y;
                for (int j = 0; j < 4; ++j) ata[i][j] += x[i] * x[j];
            }
        }
    }

    // Gaussian elimination with partial pivoting.
    std::array<std::array<double, 5>, 4> m{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) m[i][j] = ata[i][j];
        m[i][4] = aty[i];
    }
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::fabs(m[r][col]) > std::fabs(m[pivot][col])) pivot = r;
        std::swap(m[col], m[pivot]);
        if (std::fabs(m[col][col]) < 1e-12)
            throw std::runtime_error("fit_tmm_structural: singular system (grid too small)");
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            const double f = m[r][col] / m[col][col];
            for (int k = col; k < 5; ++k) m[r][k] -= f * m[col][k];
        }
    }

    TmmFit fit;
    fit.c_const = m[0][4] / m[0][0];
    fit.c_n = m[1][4] / m[1][1];
    fit.c_nd = m[2][4] / m[2][2];
    fit.c_d = m[3][4] / m[3][3];
    for (std::uint32_t n : n_list) {
        for (std::uint32_t d : d_list) {
            const double y = static_cast<double>(mac::tile_cycles(d, n));
            const double yhat = fit.c_const + fit.c_n * n + fit.c_nd * double(n) * d + fit.c_d * d;
            if (y != 0.0) fit.max_rel_err = std::max(fit.max_rel_err, std::fabs(yhat - y) / y);
        }
    }
    return fit;
}

} // namespace cost
} // namespace neurosim
