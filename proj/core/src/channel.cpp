// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfdmkit Authors

#include "gfdmkit/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gfdmkit/errors.hpp"

namespace gfdmkit {

namespace {

// e^{j 2 pi nu t}, with the integer part of nu * t removed before the trig
// call so long simulations keep full phase precision.
cplx doppler_phase(double nu, std::int64_t t) {
  const double cycles = nu * static_cast<double>(t);
  const double frac = cycles - std::floor(cycles);
  const double angle = 2.0 * std::numbers::pi * frac;
  return {std::cos(angle), std::sin(angle)};
}

cplx unit_root(std::size_t num, std::size_t den) {
  const double angle = -2.0 * std::numbers::pi * static_cast<double>(num % den) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

std::size_t DelayDopplerChannel::max_delay() const noexcept {
  std::size_t m = 0;
  for (const auto& p : paths_) m = std::max(m, p.delay);
  return m;
}

double DelayDopplerChannel::max_abs_doppler() const noexcept {
  double m = 0.0;
  for (const auto& p : paths_) m = std::max(m, std::abs(p.doppler));
  return m;
}

cplx DelayDopplerChannel::impulse_response(std::size_t delay, std::int64_t time) const {
  cplx h{};
  for (const auto& p : paths_) {
    if (p.delay == delay) h += p.gain * doppler_phase(p.doppler, time);
  }
  return h;
}

ComplexVec apply_ltv(ConstSamples x, const DelayDopplerChannel& ch, std::int64_t start_time) {
  ComplexVec r(x.size());
  for (const auto& p : ch.paths()) {
    if (p.doppler == 0.0) {
      for (std::size_t n = p.delay; n < x.size(); ++n) r[n] += p.gain * x[n - p.delay];
      continue;
    }
    for (std::size_t n = p.delay; n < x.size(); ++n) {
      r[n] += p.gain * x[n - p.delay] * doppler_phase(p.doppler, start_time + static_cast<std::int64_t>(n));
    }
  }
  return r;
}

ComplexVec add_cp_block(ConstSamples x, std::size_t cp_len) {
  if (cp_len > x.size()) {
    throw ShapeError("cyclic prefix of " + std::to_string(cp_len) + " exceeds block of " + std::to_string(x.size()));
  }
  ComplexVec out;
  out.reserve(x.size() + cp_len);
  out.insert(out.end(), x.end() - static_cast<std::ptrdiff_t>(cp_len), x.end());
  out.insert(out.end(), x.begin(), x.end());
  return out;
}

ComplexVec remove_cp_block(ConstSamples r, std::size_t cp_len, std::size_t block_len) {
  if (r.size() < cp_len + block_len) {
    throw ShapeError("received " + std::to_string(r.size()) + " samples, need " +
                     std::to_string(cp_len + block_len));
  }
  return ComplexVec(r.begin() + static_cast<std::ptrdiff_t>(cp_len),
                    r.begin() + static_cast<std::ptrdiff_t>(cp_len + block_len));
}

ComplexVec equivalent_channel_gfdm(const DelayDopplerChannel& ch, std::size_t block_len, std::size_t cp_len,
                                   std::int64_t start_time) {
  if (block_len == 0) throw ShapeError("equivalent_channel_gfdm: empty block");
  ComplexVec h(block_len);
  const auto first = start_time + static_cast<std::int64_t>(cp_len);
  for (const auto& p : ch.paths()) {
    cplx mean_phase{};
    if (p.doppler == 0.0) {
      mean_phase = 1.0;
    } else {
      for (std::size_t n = 0; n < block_len; ++n) mean_phase += doppler_phase(p.doppler, first + static_cast<std::int64_t>(n));
      mean_phase /= static_cast<double>(block_len);
    }
    const cplx tap = p.gain * mean_phase;
    for (std::size_t q = 0; q < block_len; ++q) h[q] += tap * unit_root(q * (p.delay % block_len), block_len);
  }
  return h;
}

ComplexVec ideal_channel_estimate(const DelayDopplerChannel& ch, std::size_t len, std::int64_t start_time) {
  ComplexVec h(len);
  for (const auto& p : ch.paths()) {
    if (p.delay < len) {
      h[p.delay] += p.gain * doppler_phase(p.doppler, start_time + static_cast<std::int64_t>(p.delay));
    }
  }
  return h;
}

void add_awgn(std::span<cplx> x, double variance, std::mt19937_64& rng) {
  if (!(variance >= 0.0)) throw ParameterError("noise variance must be non-negative");
  if (variance == 0.0) return;
  std::normal_distribution<double> normal(0.0, std::sqrt(variance / 2.0));
  for (auto& s : x) {
    const double re = normal(rng);
    const double im = normal(rng);
    s += cplx{re, im};
  }
}

ComplexVec awgn(ConstSamples x, const NoiseSpec& spec) {
  ComplexVec out(x.begin(), x.end());
  std::mt19937_64 rng(spec.seed);
  add_awgn(out, spec.variance, rng);
  return out;
}

}  // namespace gfdmkit
