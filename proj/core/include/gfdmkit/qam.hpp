// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfdmkit Authors

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gfdmkit/numerics.hpp"

namespace gfdmkit {

using Bits = std::vector<std::uint8_t>;

/// Gray-coded square 16-QAM with unit average energy. Each group of four
/// bits (b0 b1 b2 b3) maps b0 b1 to the in-phase level and b2 b3 to the
/// quadrature level, with 00 -> -3, 01 -> -1, 11 -> +1, 10 -> +3 (scaled by
/// 1/sqrt(10)). Throws InputError unless bits.size() is a multiple of four.
ComplexVec qam16_map(std::span<const std::uint8_t> bits);

/// Minimum-distance hard decisions, four bits per symbol.
Bits qam16_demap(ConstSamples symbols);

/// Nearest constellation point.
cplx qam16_slice(cplx symbol);

/// The 16 constellation points in natural bit order (index = b0b1b2b3).
const std::vector<cplx>& qam16_constellation();

}  // namespace gfdmkit
