// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfdmkit Authors

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "gfdmkit/numerics.hpp"

namespace gfdmkit {

/// One discrete propagation path. `doppler` is normalised to the sample
/// rate (cycles per sample).
struct Path {
  std::size_t delay = 0;
  cplx gain{1.0, 0.0};
  double doppler = 0.0;
};

/// Finite set of delay-Doppler paths. The induced time-variant impulse
/// response is h(l, n) = sum_i a_i [l == l_i] e^{j 2 pi nu_i n}.
class DelayDopplerChannel {
 public:
  DelayDopplerChannel() = default;
  explicit DelayDopplerChannel(std::vector<Path> paths) : paths_(std::move(paths)) {}

  const std::vector<Path>& paths() const noexcept { return paths_; }
  std::size_t max_delay() const noexcept;
  double max_abs_doppler() const noexcept;
  bool is_static() const noexcept { return max_abs_doppler() == 0.0; }

  /// h(l, n) at absolute sample time n.
  cplx impulse_response(std::size_t delay, std::int64_t time) const;

 private:
  std::vector<Path> paths_;
};

/// Per-sample additive noise. `variance` is the complex variance sigma_v^2.
struct NoiseSpec {
  double variance = 0.0;
  std::uint64_t seed = 0;
};

/// r[n] = sum_i a_i x[n - l_i] e^{j 2 pi nu_i (n + start_time)}; samples
/// before x[0] are zero. Output has the input's length.
ComplexVec apply_ltv(ConstSamples x, const DelayDopplerChannel& ch, std::int64_t start_time = 0);

/// Prepends the last `cp_len` samples of the block.
ComplexVec add_cp_block(ConstSamples x, std::size_t cp_len);
/// Drops the prefix and returns the `block_len` samples that follow it.
ComplexVec remove_cp_block(ConstSamples r, std::size_t cp_len, std::size_t block_len);

/// Time-averaged one-tap channel seen by a CP-framed block of `block_len`
/// samples whose prefix starts at `start_time`:
///   h~[q] = (1/N) sum_n sum_l h(l, start_time + cp_len + n) e^{-j 2 pi q l / N}.
ComplexVec equivalent_channel_gfdm(const DelayDopplerChannel& ch, std::size_t block_len, std::size_t cp_len,
                                   std::int64_t start_time = 0);

/// Response to a Dirac probe sent at `start_time`, truncated to `len`
/// samples: h_e[n] = sum_i a_i [n == l_i] e^{j 2 pi nu_i (n + start_time)}.
ComplexVec ideal_channel_estimate(const DelayDopplerChannel& ch, std::size_t len, std::int64_t start_time = 0);

/// Circularly-symmetric complex Gaussian noise, sigma_v^2 / 2 per real
/// dimension. Deterministic for a given seed.
ComplexVec awgn(ConstSamples x, const NoiseSpec& spec);
/// Same, drawing from a caller-owned generator.
void add_awgn(std::span<cplx> x, double variance, std::mt19937_64& rng);

}  // namespace gfdmkit
