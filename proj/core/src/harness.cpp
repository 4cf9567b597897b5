// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfdmkit Authors

#include "gfdmkit/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <optional>
#include <random>
#include <thread>

#include "gfdmkit/channel.hpp"
#include "gfdmkit/errors.hpp"
#include "gfdmkit/metrics.hpp"
#include "gfdmkit/qam.hpp"

namespace gfdmkit {

namespace {

constexpr std::size_t kChunkFrames = 8;
constexpr std::size_t kCalibrationSamples = std::size_t{1} << 18;
constexpr std::uint64_t kCalibrationSeed = 0x5eed;

Bits draw_bits(std::size_t count, std::mt19937_64& rng) {
  Bits bits(count);
  std::size_t i = 0;
  while (i < count) {
    std::uint64_t word = rng();
    for (int b = 0; b < 64 && i < count; ++b, ++i) {
      bits[i] = static_cast<std::uint8_t>(word & 1u);
      word >>= 1;
    }
  }
  return bits;
}

// Read-only state shared by all workers of one grid point.
struct Link {
  const SweepConfig* cfg = nullptr;
  FrameParams frame;
  ModulatorConfig modem;
  PrototypePulse pulse;
  DelayDopplerChannel channel;
  double noise_variance = 0.0;
  double tx_power = 1.0;

  // GFDM / OFDM receiver.
  Window demod;
  ComplexVec pulse_product;        // conj(gamma~[j]) g~[j]
  std::vector<std::size_t> support;  // bins where pulse_product != 0
  ComplexVec signal_psd;           // E|X_f|^2 per unit-energy symbol
  std::optional<ComplexVec> static_h;

  std::size_t N() const { return frame.block_len(); }
};

struct Partial {
  SymbolErrorAccumulator acc;
  std::size_t frames = 0;
  std::size_t frame_errors = 0;
  std::size_t failed = 0;
  std::uint64_t bits = 0;
  std::uint64_t bit_errors = 0;

  void merge(const Partial& o) {
    acc.merge(o.acc);
    frames += o.frames;
    frame_errors += o.frame_errors;
    failed += o.failed;
    bits += o.bits;
    bit_errors += o.bit_errors;
  }
};

ComplexVec transmit(const Link& link, const ComplexGrid& data) {
  if (link.cfg->waveform == Waveform::otfs) {
    return otfs_modulate(data, link.modem.window, link.cfg->otfs).samples_with_cp;
  }
  return add_cp_block(modulate(data, link.modem), link.frame.cp_len);
}

double measure_tx_power(const Link& link) {
  std::mt19937_64 rng(kCalibrationSeed);
  const std::size_t K = link.frame.subcarriers;
  const std::size_t M = link.frame.subsymbols;
  double energy = 0.0;
  std::size_t samples = 0;
  while (samples < kCalibrationSamples) {
    const ComplexVec symbols = qam16_map(draw_bits(4 * K * M, rng));
    const ComplexVec x = transmit(link, unvec(symbols, K, M));
    energy += squared_norm(x);
    samples += x.size();
  }
  return energy / static_cast<double>(samples);
}

// One-tap frequency-domain equaliser coefficients; nullopt on a ZF null.
std::optional<ComplexVec> fde_coefficients(const Link& link, const ComplexVec& h) {
  const std::size_t N = link.N();
  const double noise_per_bin = static_cast<double>(N) * link.noise_variance;
  ComplexVec c(N);
  for (std::size_t f = 0; f < N; ++f) {
    switch (link.cfg->receiver) {
      case ReceiverKind::mf:
        c[f] = std::conj(h[f]);
        break;
      case ReceiverKind::zf:
        if (std::abs(h[f]) <= kZfSingularityThreshold) return std::nullopt;
        c[f] = 1.0 / h[f];
        break;
      case ReceiverKind::mmse: {
        const double p = link.signal_psd[f].real();
        const double den = std::norm(h[f]) * p + noise_per_bin;
        c[f] = den > 0.0 ? std::conj(h[f]) * p / den : cplx{};
        break;
      }
    }
  }
  return c;
}

// Returns nullopt when the frame cannot be equalised.
std::optional<ComplexGrid> receive_gfdm(const Link& link, const ComplexVec& r, std::int64_t t0) {
  const std::size_t N = link.N();
  const std::size_t K = link.frame.subcarriers;
  const std::size_t M = link.frame.subsymbols;
  ComplexVec Y = dft(remove_cp_block(r, link.frame.cp_len, N));
  const ComplexVec h = link.static_h ? *link.static_h : equivalent_channel_gfdm(link.channel, N, link.frame.cp_len, t0);
  const auto c = fde_coefficients(link, h);
  if (!c) return std::nullopt;
  ComplexVec ch(N);
  for (std::size_t f = 0; f < N; ++f) {
    ch[f] = (*c)[f] * h[f];
    Y[f] *= (*c)[f];
  }
  ComplexGrid d = demodulate(idft(Y), link.demod, link.modem);
  for (std::size_t k = 0; k < K; ++k) {
    cplx gain{};
    for (std::size_t j : link.support) gain += link.pulse_product[j] * ch[(j + k * M) % N];
    gain /= static_cast<double>(N);
    if (std::abs(gain) == 0.0) return std::nullopt;
    for (std::size_t m = 0; m < M; ++m) d(k, m) /= gain;
  }
  return d;
}

std::optional<ComplexGrid> receive_otfs(const Link& link, const ComplexVec& r, std::int64_t t0) {
  const OtfsParams& p = link.cfg->otfs;
  const ComplexGrid h = equivalent_channel_otfs(link.channel, p, t0).grid;
  const double ratio = link.noise_variance;
  try {
    ComplexGrid d = otfs_receive(r, link.modem.window, h, link.cfg->receiver, ratio, p);
    const cplx gain = otfs_symbol_gain(link.modem.window, h, link.cfg->receiver, ratio);
    if (std::abs(gain) == 0.0) return std::nullopt;
    return d.scaled(1.0 / gain);
  } catch (const SingularWindowError&) {
    return std::nullopt;
  }
}

void run_frame(const Link& link, std::size_t index, Partial& out) {
  const SweepConfig& cfg = *link.cfg;
  const std::size_t K = link.frame.subcarriers;
  const std::size_t M = link.frame.subsymbols;
  std::mt19937_64 rng(cfg.master_seed + index);
  const auto t0 = static_cast<std::int64_t>(index * cfg.samples_per_frame());

  const Bits bits = draw_bits(4 * K * M, rng);
  const ComplexVec symbols = qam16_map(bits);
  const ComplexGrid data = unvec(symbols, K, M);

  ComplexVec r = apply_ltv(transmit(link, data), link.channel, t0);
  add_awgn(r, link.noise_variance, rng);

  const auto estimate = cfg.waveform == Waveform::otfs ? receive_otfs(link, r, t0) : receive_gfdm(link, r, t0);
  ++out.frames;
  if (!estimate) {
    ++out.failed;
    ++out.frame_errors;
    return;
  }
  const ComplexVec d_hat = vec(*estimate);
  const Bits decided = qam16_demap(d_hat);
  std::uint64_t errors = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) errors += bits[i] != decided[i];
  out.bits += bits.size();
  out.bit_errors += errors;
  if (errors > 0) ++out.frame_errors;
  out.acc.add(d_hat, symbols);
}

Link make_link(const SweepConfig& cfg, double snr_db, double doppler_hz) {
  cfg.validate();
  Link link;
  link.cfg = &cfg;
  link.frame = cfg.modem_frame();
  link.pulse = make_rc_pulse(link.frame, cfg.pulse_alpha);
  link.modem.params = link.frame;
  link.modem.spreading_enabled = cfg.spreading;
  link.modem.transform_domain = cfg.transform_domain;
  link.modem.allocation = cfg.waveform == Waveform::otfs ? Allocation::otfs : Allocation::gfdm;
  link.modem.window = tx_window(link.pulse, link.frame, cfg.transform_domain);
  link.modem.validate();
  link.channel = cfg.channel.channel(doppler_hz);

  link.tx_power = measure_tx_power(link);
  link.noise_variance = std::isinf(snr_db) ? 0.0 : link.tx_power * std::pow(10.0, -snr_db / 10.0);

  if (cfg.waveform != Waveform::otfs) {
    const std::size_t N = link.N();
    const std::size_t K = link.frame.subcarriers;
    const std::size_t M = link.frame.subsymbols;
    switch (cfg.receiver) {
      case ReceiverKind::mf: link.demod = rx_window(link.modem.window, ReceiverKind::mf); break;
      case ReceiverKind::zf: link.demod = rx_window(link.modem.window, ReceiverKind::zf); break;
      case ReceiverKind::mmse:
        link.demod = rx_window(link.modem.window, ReceiverKind::mmse, link.noise_variance);
        break;
    }
    const PrototypePulse gamma = pulse_from_rx_window(link.demod);
    link.pulse_product.resize(N);
    for (std::size_t j = 0; j < N; ++j) {
      link.pulse_product[j] = std::conj(gamma.spectrum[j]) * link.pulse.spectrum[j];
      if (std::abs(link.pulse_product[j]) > 1e-14) link.support.push_back(j);
    }
    link.signal_psd.assign(N, cplx{});
    for (std::size_t f = 0; f < N; ++f) {
      double p = 0.0;
      for (std::size_t k = 0; k < K; ++k) p += std::norm(link.pulse.spectrum[(f + N - (k * M) % N) % N]);
      link.signal_psd[f] = static_cast<double>(M) * p;
    }
    if (link.channel.is_static()) {
      link.static_h = equivalent_channel_gfdm(link.channel, N, link.frame.cp_len, 0);
    }
  }
  return link;
}

unsigned worker_count(const SweepConfig& cfg, std::size_t chunks) {
  unsigned n = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, chunks));
}

}  // namespace

MetricsRecord run_point(const SweepConfig& cfg, double snr_db, double doppler_hz) {
  const Link link = make_link(cfg, snr_db, doppler_hz);
  const std::size_t positions = cfg.symbols_per_frame();
  const std::size_t chunks = (cfg.frames_per_point + kChunkFrames - 1) / kChunkFrames;

  std::vector<Partial> partials(chunks, Partial{SymbolErrorAccumulator(positions)});
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= chunks || stop.load()) return;
      try {
        const std::size_t end = std::min(cfg.frames_per_point, (c + 1) * kChunkFrames);
        for (std::size_t f = c * kChunkFrames; f < end; ++f) run_frame(link, f, partials[c]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        stop = true;
        return;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned n = worker_count(cfg, chunks);
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  Partial total{SymbolErrorAccumulator(positions)};
  for (const auto& p : partials) total.merge(p);

  MetricsRecord rec;
  rec.waveform = cfg.waveform;
  rec.snr_db = snr_db;
  rec.doppler_hz = doppler_hz;
  rec.seed = cfg.master_seed;
  rec.frames = total.frames;
  rec.frame_errors = total.frame_errors;
  rec.failed_frames = total.failed;
  rec.bits = total.bits;
  rec.bit_errors = total.bit_errors;
  rec.noise_variance = link.noise_variance;
  rec.tx_power = link.tx_power;
  rec.fer = static_cast<double>(total.frame_errors) / static_cast<double>(total.frames);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  rec.ber = total.bits > 0 ? static_cast<double>(total.bit_errors) / static_cast<double>(total.bits) : nan;
  rec.nmse = total.acc.frames() > 0 ? total.acc.nmse() : nan;
  if (total.acc.frames() >= 2) {
    PerSymbolSnr s = total.acc.per_symbol();
    rec.snr_spread = relative_spread(s.error_ratio);
    rec.error_ratio = std::move(s.error_ratio);
    rec.snr_db_per_symbol = std::move(s.snr_db);
  } else {
    rec.snr_spread = nan;
  }
  return rec;
}

SweepReport run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  SweepReport report;
  report.config = cfg;
  for (double fd : cfg.doppler_grid_hz)
    for (double snr : cfg.snr_grid_db) report.records.push_back(run_point(cfg, snr, fd));
  return report;
}

}  // namespace gfdmkit
