// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace neurosim {

// MAC accumulator left the 29-bit signed range. Signals an ill-scaled
// network, not a simulator bug.
struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidScale : std::invalid_argument {
    explicit InvalidScale(const std::string& what) : std::invalid_argument(what) {}
};

// A single neuron's weight column does not fit the per-PE SRAM budget.
struct PlacementInfeasible : std::runtime_error {
    explicit PlacementInfeasible(const std::string& what) : std::runtime_error(what) {}
};

// Plant state exceeded the configured bound (unstable gains).
struct DivergenceError : std::runtime_error {
    explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace neurosim
