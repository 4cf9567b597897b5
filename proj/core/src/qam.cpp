// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfdmkit Authors

#include "gfdmkit/qam.hpp"

#include <cmath>
#include <string>

#include "gfdmkit/errors.hpp"

namespace gfdmkit {

namespace {

const double kScale = 1.0 / std::sqrt(10.0);

// Two Gray bits -> PAM level in {-3, -1, 1, 3}.
double level(std::uint8_t hi, std::uint8_t lo) {
  static constexpr double table[4] = {-3.0, -1.0, 3.0, 1.0};  // 00, 01, 10, 11
  return table[(hi << 1) | lo];
}

// Decision regions split at -2, 0, +2 (unscaled).
void decide(double v, std::uint8_t& hi, std::uint8_t& lo) {
  const double u = v / kScale;
  hi = u >= 0.0 ? 1 : 0;
  lo = std::abs(u) < 2.0 ? 1 : 0;
}

}  // namespace

ComplexVec qam16_map(std::span<const std::uint8_t> bits) {
  if (bits.size() % 4 != 0) {
    throw InputError("16-QAM needs a multiple of 4 bits, got " + std::to_string(bits.size()));
  }
  ComplexVec out(bits.size() / 4);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto* b = &bits[4 * i];
    out[i] = cplx{level(b[0] & 1U, b[1] & 1U), level(b[2] & 1U, b[3] & 1U)} * kScale;
  }
  return out;
}

Bits qam16_demap(ConstSamples symbols) {
  Bits bits(symbols.size() * 4);
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    decide(symbols[i].real(), bits[4 * i], bits[4 * i + 1]);
    decide(symbols[i].imag(), bits[4 * i + 2], bits[4 * i + 3]);
  }
  return bits;
}

cplx qam16_slice(cplx symbol) {
  std::uint8_t b[4];
  decide(symbol.real(), b[0], b[1]);
  decide(symbol.imag(), b[2], b[3]);
  return cplx{level(b[0], b[1]), level(b[2], b[3])} * kScale;
}

const std::vector<cplx>& qam16_constellation() {
  static const std::vector<cplx> points = [] {
    std::vector<cplx> p(16);
    for (std::uint8_t i = 0; i < 16; ++i) {
      p[i] = cplx{level((i >> 3) & 1U, (i >> 2) & 1U), level((i >> 1) & 1U, i & 1U)} * kScale;
    }
    return p;
  }();
  return points;
}

}  // namespace gfdmkit
