// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfdmkit Authors

#include "gfdmkit/gfdm.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gfdmkit/errors.hpp"

namespace gfdmkit {

namespace {

std::string shape_of(const ComplexGrid& g) {
  return std::to_string(g.rows()) + "x" + std::to_string(g.cols());
}

void require_block_shape(const ComplexGrid& g, const FrameParams& p, const char* what) {
  if (g.rows() != p.subcarriers || g.cols() != p.subsymbols) {
    throw ShapeError(std::string(what) + ": expected " + std::to_string(p.subcarriers) + "x" +
                     std::to_string(p.subsymbols) + " grid, got " + shape_of(g));
  }
}

double raised_cosine(double offset, double half_band, double alpha) {
  const double a = std::abs(offset);
  const double flat = (1.0 - alpha) * half_band;
  if (a <= flat) return 1.0;
  if (a > (1.0 + alpha) * half_band) return 0.0;
  return 0.5 * (1.0 + std::cos(std::numbers::pi / (2.0 * alpha * half_band) * (a - flat)));
}

ComplexGrid build_pulse_matrix(const PrototypePulse& pulse, const FrameParams& params) {
  params.validate();
  const std::size_t K = params.subcarriers;
  const std::size_t M = params.subsymbols;
  const std::size_t N = params.block_len();
  if (pulse.size() != N) throw ShapeError("pulse length does not match the block length");
  ComplexGrid a(N, N);
  for (std::size_t n = 0; n < N; ++n)
    for (std::size_t m = 0; m < M; ++m) {
      const cplx g = pulse.time[(n + N - (m * K) % N) % N];
      for (std::size_t k = 0; k < K; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>((k * n) % K) /
                             static_cast<double>(K);
        a(n, k + m * K) = g * cplx{std::cos(angle), std::sin(angle)};
      }
    }
  return a;
}

}  // namespace

void FrameParams::validate() const {
  if (subcarriers == 0 || subsymbols == 0) {
    throw ConfigError("frame needs at least one subcarrier and one subsymbol");
  }
  if (cp_len >= block_len()) {
    throw ConfigError("cyclic prefix (" + std::to_string(cp_len) + ") must be shorter than the block (" +
                      std::to_string(block_len()) + ")");
  }
}

PrototypePulse PrototypePulse::from_time(ComplexVec g, bool unit_energy) {
  if (unit_energy) {
    const double e = squared_norm(g);
    if (e > 0.0) {
      const double s = 1.0 / std::sqrt(e);
      for (auto& v : g) v *= s;
    }
  }
  PrototypePulse p;
  p.spectrum = dft(g);
  p.time = std::move(g);
  return p;
}

PrototypePulse PrototypePulse::from_spectrum(ComplexVec g_tilde, bool unit_energy) {
  return from_time(idft(g_tilde), unit_energy);
}

const char* to_string(Allocation a) noexcept { return a == Allocation::gfdm ? "gfdm" : "otfs"; }

const char* to_string(ReceiverKind k) noexcept {
  switch (k) {
    case ReceiverKind::mf:
      return "mf";
    case ReceiverKind::zf:
      return "zf";
    case ReceiverKind::mmse:
      return "mmse";
  }
  return "?";
}

void ModulatorConfig::validate() const {
  params.validate();
  if (window.w.rows() != params.subcarriers || window.w.cols() != params.subsymbols) {
    throw ConfigError("window shape " + shape_of(window.w) + " does not match the frame");
  }
  if (window.domain != transform_domain) {
    throw ConfigError(std::string("window is ") + to_string(window.domain) + "-domain but transform is " +
                      to_string(transform_domain) + "-domain");
  }
  if (allocation == Allocation::otfs && transform_domain != Domain::time) {
    throw ConfigError("otfs allocation requires the time-domain transform");
  }
}

// ---------------------------------------------------------------------------

PrototypePulse make_rc_pulse(const FrameParams& params, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ParameterError("roll-off must lie in [0, 1], got " + std::to_string(alpha));
  }
  params.validate();
  const std::size_t N = params.block_len();
  const double M = static_cast<double>(params.subsymbols);
  const double centre = params.subsymbols % 2 == 0 ? -0.5 : 0.0;
  const double half_n = static_cast<double>(N) / 2.0;

  ComplexVec spectrum(N);
  for (std::size_t b = 0; b < N; ++b) {
    double offset = static_cast<double>(b) - centre;
    if (offset > half_n) offset -= static_cast<double>(N);
    spectrum[b] = raised_cosine(offset, M / 2.0, alpha);
  }
  return PrototypePulse::from_spectrum(std::move(spectrum), /*unit_energy=*/true);
}

Window tx_window(const PrototypePulse& pulse, const FrameParams& params, Domain domain) {
  params.validate();
  const std::size_t K = params.subcarriers;
  const std::size_t M = params.subsymbols;
  if (pulse.size() != params.block_len() || pulse.spectrum.size() != params.block_len()) {
    throw ShapeError("tx_window: pulse length " + std::to_string(pulse.size()) +
                     " does not match block length " + std::to_string(params.block_len()));
  }
  const double scale = static_cast<double>(K);
  if (domain == Domain::time) {
    return {dzt(pulse.time, M, K).grid.transposed().scaled(scale), Domain::time};
  }
  return {dzt_freq(pulse.spectrum, K, M).grid.scaled(scale), Domain::frequency};
}

PrototypePulse pulse_from_tx_window(const Window& window) {
  const double inv_k = 1.0 / static_cast<double>(window.w.rows());
  if (window.domain == Domain::time) {
    return PrototypePulse::from_time(idzt({window.w.transposed().scaled(inv_k), Domain::time}));
  }
  return PrototypePulse::from_spectrum(idzt_freq({window.w.scaled(inv_k), Domain::frequency}));
}

Window rx_window_from_pulse(const PrototypePulse& gamma, const FrameParams& params, Domain domain) {
  Window w = tx_window(gamma, params, domain);
  w.w = w.w.conj().scaled(1.0 / static_cast<double>(params.subcarriers));
  return w;
}

PrototypePulse pulse_from_rx_window(const Window& rx) {
  const double k = static_cast<double>(rx.w.rows());
  return pulse_from_tx_window({rx.w.conj().scaled(k), rx.domain});
}

Window rx_window(const Window& tx, ReceiverKind kind, double noise_to_symbol_ratio) {
  if (!(noise_to_symbol_ratio >= 0.0)) {
    throw ParameterError("noise-to-symbol ratio must be non-negative");
  }
  Window rx{ComplexGrid(tx.w.rows(), tx.w.cols()), tx.domain};
  const double reg = static_cast<double>(tx.w.rows()) * noise_to_symbol_ratio;
  for (std::size_t k = 0; k < tx.w.rows(); ++k)
    for (std::size_t m = 0; m < tx.w.cols(); ++m) {
      const cplx w = tx.w(k, m);
      switch (kind) {
        case ReceiverKind::mf:
          rx.w(k, m) = std::conj(w);
          break;
        case ReceiverKind::zf:
          if (std::abs(w) <= kZfSingularityThreshold) throw SingularWindowError(k, m, std::abs(w));
          rx.w(k, m) = 1.0 / w;
          break;
        case ReceiverKind::mmse:
          rx.w(k, m) = std::conj(w) / (std::norm(w) + reg);
          break;
      }
    }
  return rx;
}

ComplexGrid spread(const ComplexGrid& data) {
  return dft_rows(dft_columns(data, /*inverse=*/true));
}

ComplexGrid despread(const ComplexGrid& spread_data) {
  return dft_rows(dft_columns(spread_data), /*inverse=*/true);
}

ComplexVec modulate(const ComplexGrid& data, const ModulatorConfig& cfg) {
  cfg.validate();
  require_block_shape(data, cfg.params, "modulate");
  const std::size_t K = cfg.params.subcarriers;
  const std::size_t M = cfg.params.subsymbols;

  const ComplexGrid x_grid =
      hadamard(cfg.window.w, cfg.spreading_enabled ? spread(data) : data);

  if (cfg.transform_domain == Domain::frequency) {
    return idft(vec_t(dft_columns(x_grid)));
  }
  // V_{M,K}(x) = (1/M) F_M^H X^T, an M x K grid whose columns are length-M
  // segments; GFDM reads it row by row, OTFS column by column.
  const ComplexGrid v = dft_columns(x_grid.transposed(), /*inverse=*/true);
  const ComplexVec x = vec_t(v);
  if (cfg.allocation == Allocation::otfs) return commutation_apply(x, M, K);
  return x;
}

ComplexGrid demodulate(ConstSamples y_eq, const Window& rx, const ModulatorConfig& cfg) {
  cfg.validate();
  const std::size_t K = cfg.params.subcarriers;
  const std::size_t M = cfg.params.subsymbols;
  if (y_eq.size() != cfg.params.block_len()) {
    throw ShapeError("demodulate: received block has " + std::to_string(y_eq.size()) + " samples, expected " +
                     std::to_string(cfg.params.block_len()));
  }
  require_block_shape(rx.w, cfg.params, "demodulate window");
  if (rx.domain != cfg.transform_domain) throw ConfigError("receive window domain does not match the transform");

  ComplexGrid y_grid;
  if (cfg.transform_domain == Domain::frequency) {
    y_grid = dft_columns(reshape_v(dft(y_eq), K, M), /*inverse=*/true);
  } else if (cfg.allocation == Allocation::otfs) {
    y_grid = dft_columns(reshape_v(commutation_apply(y_eq, K, M), M, K)).transposed();
  } else {
    y_grid = dft_columns(reshape_v(y_eq, M, K)).transposed();
  }
  ComplexGrid d_hat = hadamard(rx.w, y_grid);
  return cfg.spreading_enabled ? despread(d_hat) : d_hat;
}

ComplexGrid build_matrix_A(const PrototypePulse& pulse, const FrameParams& params) {
  return build_pulse_matrix(pulse, params);
}

ComplexGrid build_matrix_B(const PrototypePulse& gamma, const FrameParams& params) {
  return build_pulse_matrix(gamma, params);
}

}  // namespace gfdmkit
