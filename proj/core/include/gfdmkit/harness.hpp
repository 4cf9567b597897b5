// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfdmkit Authors

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gfdmkit/gfdm.hpp"
#include "gfdmkit/otfs.hpp"
#include "gfdmkit/preset.hpp"

namespace gfdmkit {

/// Library version string.
const char* version() noexcept;

enum class Waveform { ofdm, gfdm, otfs };

const char* to_string(Waveform w) noexcept;
Waveform parse_waveform(std::string_view s);
ReceiverKind parse_receiver(std::string_view s);

/// One simulation campaign. OFDM is run as GFDM with subsymbols = 1; for
/// it only frame.subcarriers and frame.cp_len are meaningful.
struct SweepConfig {
  Waveform waveform = Waveform::gfdm;
  FrameParams frame{16, 8, 32};
  OtfsParams otfs{128, 16, 32};
  double pulse_alpha = 0.0;
  ReceiverKind receiver = ReceiverKind::mmse;
  Domain transform_domain = Domain::time;
  bool spreading = true;
  std::vector<double> snr_grid_db{10.0};
  std::vector<double> doppler_grid_hz{0.0};
  std::string channel_preset_path;  // as written in the config, for the record
  ChannelPreset channel;
  std::size_t frames_per_point = 100;
  std::uint64_t master_seed = 1;
  unsigned threads = 0;  // 0 = hardware concurrency

  /// Throws ConfigError.
  void validate() const;

  /// Frame shape the modem actually runs (OTFS: the equivalent GFDM frame).
  FrameParams modem_frame() const;
  std::size_t symbols_per_frame() const;
  /// Samples on the air per frame, prefixes included.
  std::size_t samples_per_frame() const;
  /// Prefix overhead relative to one block-CP frame of equal payload:
  /// (M_o + N_cp) N_o / (N + N_cp) for OTFS, 1 otherwise.
  double overhead_factor() const;
};

/// Parses a sweep configuration. `base_dir` resolves a relative
/// `channel_preset` path.
///
///   waveform: otfs              # ofdm | gfdm | otfs
///   frame: {subcarriers: 128, symbols: 16, cp_len: 32}
///   pulse_alpha: 0.0
///   receiver: mmse              # mf | zf | mmse
///   transform_domain: time      # optional, gfdm/ofdm only
///   spreading: true             # optional
///   snr_grid_db: [10, 14, 18]   # .inf for a noiseless run
///   doppler_grid_hz: [0, 500]
///   channel_preset: three_path.yaml   # or an inline `channel:` mapping
///   frames_per_point: 200
///   master_seed: 1
///   threads: 0
///
/// GFDM frames use {subcarriers, subsymbols, cp_len}; OFDM frames use
/// {subcarriers, cp_len}.
SweepConfig parse_sweep_config(std::string_view yaml_text, const std::filesystem::path& base_dir = {});
SweepConfig load_sweep_config(const std::filesystem::path& file);

struct MetricsRecord {
  Waveform waveform = Waveform::gfdm;
  double snr_db = 0.0;
  double doppler_hz = 0.0;
  std::uint64_t seed = 0;

  double ber = 0.0;
  double fer = 0.0;
  double nmse = 0.0;
  /// Relative standard deviation of the per-symbol error ratio; NaN with
  /// fewer than two decoded frames.
  double snr_spread = 0.0;
  std::vector<double> error_ratio;  // per symbol position, vec(D) order
  std::vector<double> snr_db_per_symbol;

  std::size_t frames = 0;
  std::size_t frame_errors = 0;
  std::size_t failed_frames = 0;  // singular ZF equalisation
  std::uint64_t bits = 0;
  std::uint64_t bit_errors = 0;
  double noise_variance = 0.0;
  double tx_power = 0.0;
};

struct SweepReport {
  SweepConfig config;
  std::vector<MetricsRecord> records;  // Doppler-major, SNR-minor
};

/// Simulates cfg.frames_per_point frames at one grid point. Frame f uses
/// seed master_seed + f for its bits and noise, and starts at absolute
/// time f * samples_per_frame() so Doppler phases run on across frames.
MetricsRecord run_point(const SweepConfig& cfg, double snr_db, double doppler_hz);

/// Runs every (Doppler, SNR) pair.
SweepReport run_sweep(const SweepConfig& cfg);
/// Same, writing sweep.csv and sweep.json into `out_dir`. The directory is
/// checked for writability before anything is simulated (IoError).
SweepReport run_sweep(const SweepConfig& cfg, const std::filesystem::path& out_dir);

std::string to_csv(const SweepReport& report);
std::string to_json(const SweepReport& report);
void write_report(const SweepReport& report, const std::filesystem::path& out_dir);

/// Shortest round-trip decimal form; "nan", "inf", "-inf" for non-finite.
std::string format_number(double v);
/// RFC 4180 field quoting.
std::string csv_field(std::string_view s);

}  // namespace gfdmkit
