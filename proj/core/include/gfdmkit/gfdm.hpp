// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfdmkit Authors

#pragma once

#include <cstddef>

#include "gfdmkit/numerics.hpp"
#include "gfdmkit/zak.hpp"

namespace gfdmkit {

/// Shape of one GFDM block: `subcarriers` x `subsymbols` data symbols carried
/// on block_len() = subcarriers * subsymbols samples, plus a cyclic prefix.
struct FrameParams {
  std::size_t subcarriers = 1;
  std::size_t subsymbols = 1;
  std::size_t cp_len = 0;

  std::size_t block_len() const noexcept { return subcarriers * subsymbols; }

  /// Throws ConfigError unless subcarriers, subsymbols >= 1 and
  /// cp_len < block_len().
  void validate() const;
};

/// Prototype pulse g (time domain, length N) with its cached N-point DFT.
struct PrototypePulse {
  ComplexVec time;
  ComplexVec spectrum;

  /// Builds the pair from time samples, optionally scaled to unit energy.
  static PrototypePulse from_time(ComplexVec g, bool unit_energy = false);
  /// Builds the pair from an N-point spectrum, optionally scaled so the
  /// time-domain pulse has unit energy.
  static PrototypePulse from_spectrum(ComplexVec g_tilde, bool unit_energy = false);

  std::size_t size() const noexcept { return time.size(); }
};

/// Subcarrier x subsymbol window applied elementwise to the spread data.
struct Window {
  ComplexGrid w;
  Domain domain = Domain::time;
};

enum class Allocation { gfdm, otfs };
enum class ReceiverKind { mf, zf, mmse };

const char* to_string(Allocation a) noexcept;
const char* to_string(ReceiverKind k) noexcept;

/// Everything the four-step modulator needs besides the data.
struct ModulatorConfig {
  FrameParams params;
  Window window;
  bool spreading_enabled = true;
  Domain transform_domain = Domain::time;
  Allocation allocation = Allocation::gfdm;

  /// Throws ConfigError on inconsistent shapes, a window/transform domain
  /// mismatch, or OTFS allocation combined with the frequency-domain path.
  void validate() const;
};

/// |w| at or below this makes zero-forcing window synthesis fail.
inline constexpr double kZfSingularityThreshold = 1e-6;

// ---------------------------------------------------------------------------

/// Periodic raised-cosine prototype, defined on the N-bin spectrum grid.
///
/// The passband spans `subsymbols` bins and is centred on bin 0 (on bin
/// -1/2 for an even number of bins, so the flat gate covers exactly
/// `subsymbols` bins). The roll-off occupies alpha * subsymbols bins split
/// evenly across both band edges. The result is scaled to unit time-domain
/// energy. Throws ParameterError for alpha outside [0, 1].
PrototypePulse make_rc_pulse(const FrameParams& params, double alpha);

/// Transmit window of a pulse: K * Z_{M,K}(g)^T in the time domain, or
/// K * Zbar_{K,M}(g~) in the frequency domain.
Window tx_window(const PrototypePulse& pulse, const FrameParams& params, Domain domain);

/// Recovers the pulse whose transmit window is `window`.
PrototypePulse pulse_from_tx_window(const Window& window);

/// Receive window that makes demodulate() compute B^H y for the receiver
/// pulse gamma: conj(tx_window(gamma)) / K.
Window rx_window_from_pulse(const PrototypePulse& gamma, const FrameParams& params, Domain domain);

/// Receiver pulse implied by a receive window (inverse of rx_window_from_pulse).
PrototypePulse pulse_from_rx_window(const Window& rx);

/// Receive window synthesised elementwise from a transmit window.
///
///   mf   : conj(w)
///   zf   : 1 / w                         (SingularWindowError if |w| <= 1e-6)
///   mmse : conj(w) / (|w|^2 + K * ratio)
///
/// `noise_to_symbol_ratio` is sigma_v^2 / sigma_d^2. The MMSE window equals
/// the dense receiver (A^H A + ratio * I)^{-1} A^H. Note mf carries a gain of
/// K relative to A^H.
Window rx_window(const Window& tx, ReceiverKind kind, double noise_to_symbol_ratio = 0.0);

/// D_s = (1/K) F_K^H D F_M.
ComplexGrid spread(const ComplexGrid& data);
/// D = (1/M) F_K D_s F_M^H.
ComplexGrid despread(const ComplexGrid& spread_data);

/// Four-step modulator: spread, window, transform, allocate. Returns the
/// N-sample time-domain block. Data entry (k, m) is symbol k + mK of vec(D).
ComplexVec modulate(const ComplexGrid& data, const ModulatorConfig& cfg);

/// Inverse chain with receive window `rx`. `rx.domain` must match
/// cfg.transform_domain.
ComplexGrid demodulate(ConstSamples y_eq, const Window& rx, const ModulatorConfig& cfg);

/// Dense modulation matrix [A]_{n, k+mK} = g[<n - mK>_N] e^{j2pi kn/K}.
ComplexGrid build_matrix_A(const PrototypePulse& pulse, const FrameParams& params);
/// Same construction with the receiver pulse; demodulation is B^H y.
ComplexGrid build_matrix_B(const PrototypePulse& gamma, const FrameParams& params);

}  // namespace gfdmkit
