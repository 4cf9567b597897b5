// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfdmkit Authors

#pragma once

#include <cstddef>
#include <cstdint>

#include "gfdmkit/channel.hpp"
#include "gfdmkit/gfdm.hpp"
#include "gfdmkit/numerics.hpp"

namespace gfdmkit {

/// OTFS burst: `symbols` OFDM symbols of `subcarriers` samples, each with its
/// own `cp_len`-sample cyclic prefix.
struct OtfsParams {
  std::size_t subcarriers = 1;
  std::size_t symbols = 1;
  std::size_t cp_len = 0;

  std::size_t symbol_len_with_cp() const noexcept { return subcarriers + cp_len; }
  std::size_t burst_len() const noexcept { return subcarriers * symbols; }
  std::size_t burst_len_with_cp() const noexcept { return symbols * symbol_len_with_cp(); }

  /// The equivalent GFDM frame: symbols as subcarriers, subcarriers as
  /// subsymbols. The CP is carried per symbol, so the block CP is zero.
  FrameParams as_gfdm() const noexcept { return {symbols, subcarriers, 0}; }

  void validate() const;
};

struct OtfsFrame {
  ComplexVec samples;           // burst without prefixes
  ComplexVec samples_with_cp;   // what goes on the air
};

/// Transmits a symbols x subcarriers data grid: inverse-SFFT spreading,
/// windowing with `tx` (time-domain window of the equivalent GFDM frame),
/// the GFDM transform, then the OTFS allocation and per-symbol prefixes.
OtfsFrame otfs_modulate(const ComplexGrid& data, const Window& tx, const OtfsParams& p);

/// Cyclic prefix in front of every consecutive `subcarriers`-sample symbol.
ComplexVec add_cp_per_symbol(ConstSamples s, const OtfsParams& p);
/// Drops each symbol's prefix; column q of the result is symbol q.
ComplexGrid strip_cp_per_symbol(ConstSamples r, const OtfsParams& p);

struct OtfsEquivalentChannel {
  ComplexGrid grid;                // subcarriers x symbols
  bool delay_exceeds_cp = false;   // paths outside the prefix leak interference
};

/// Per-symbol time-averaged channel on each subcarrier:
///   H[p, q] = (1/M_o) sum_m sum_l h(l, t0 + N_cp + m + q (M_o + N_cp)) e^{-j 2 pi l p / M_o}
/// where t0 is `start_time`, the absolute time of the burst's first sample.
OtfsEquivalentChannel equivalent_channel_otfs(const DelayDopplerChannel& ch, const OtfsParams& p,
                                              std::int64_t start_time = 0);

/// Equivalent transmit window transpose(H_eq) (.) W_tx seen after the channel.
Window otfs_equivalent_window(const Window& tx, const ComplexGrid& h_eq);

/// Combined equalisation and demodulation of a received burst (with
/// prefixes). The receive window is synthesised from the equivalent window
/// and the whole chain is one circular filtering pass.
ComplexGrid otfs_receive(ConstSamples r, const Window& tx, const ComplexGrid& h_eq, ReceiverKind kind,
                         double noise_to_symbol_ratio, const OtfsParams& p);

/// Average gain the combined receiver applies to every symbol,
/// mean(W_rx (.) W_eq). Dividing by it removes the MMSE bias.
cplx otfs_symbol_gain(const Window& tx, const ComplexGrid& h_eq, ReceiverKind kind,
                      double noise_to_symbol_ratio);

}  // namespace gfdmkit
