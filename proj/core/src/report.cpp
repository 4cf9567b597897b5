// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfdmkit Authors

#include <charconv>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <system_error>

#include "gfdmkit/errors.hpp"
#include "gfdmkit/harness.hpp"

namespace gfdmkit {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

ordered_json numbers(const std::vector<double>& values) {
  ordered_json out = ordered_json::array();
  for (double v : values) out.push_back(number(v));
  return out;
}

ordered_json config_json(const SweepConfig& cfg) {
  ordered_json j;
  j["waveform"] = to_string(cfg.waveform);
  switch (cfg.waveform) {
    case Waveform::otfs:
      j["frame"] = {{"subcarriers", cfg.otfs.subcarriers}, {"symbols", cfg.otfs.symbols}, {"cp_len", cfg.otfs.cp_len}};
      break;
    case Waveform::ofdm:
      j["frame"] = {{"subcarriers", cfg.frame.subcarriers}, {"cp_len", cfg.frame.cp_len}};
      break;
    case Waveform::gfdm:
      j["frame"] = {{"subcarriers", cfg.frame.subcarriers},
                    {"subsymbols", cfg.frame.subsymbols},
                    {"cp_len", cfg.frame.cp_len}};
      break;
  }
  j["pulse_alpha"] = cfg.pulse_alpha;
  j["receiver"] = to_string(cfg.receiver);
  j["transform_domain"] = to_string(cfg.transform_domain);
  j["spreading"] = cfg.spreading;
  j["snr_grid_db"] = numbers(cfg.snr_grid_db);
  j["doppler_grid_hz"] = numbers(cfg.doppler_grid_hz);
  j["frames_per_point"] = cfg.frames_per_point;
  j["master_seed"] = cfg.master_seed;

  ordered_json ch;
  ch["preset_path"] = cfg.channel_preset_path;
  ch["name"] = cfg.channel.name;
  ch["sample_rate_hz"] = cfg.channel.sample_rate_hz;
  ch["normalize_power"] = cfg.channel.normalize_power;
  ch["paths"] = ordered_json::array();
  for (const auto& p : cfg.channel.paths) {
    ch["paths"].push_back({{"delay_samples", p.delay_samples},
                           {"gain_db", p.gain_db},
                           {"phase_deg", p.phase_deg},
                           {"doppler_hz", p.doppler_hz}});
  }
  ch["doppler_rule"] =
      "preset Dopplers rescaled so the largest magnitude equals the grid value; "
      "a preset without Doppler gets f_d cos(2 pi i / P) on path i of P";
  j["channel"] = ch;
  return j;
}

void ensure_writable(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  const auto probe = dir / ".gfdmsim-write-probe";
  {
    std::ofstream out(probe);
    if (!out) throw IoError("output directory " + dir.string() + " is not writable");
  }
  std::filesystem::remove(probe, ec);
}

void write_file(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw IoError("cannot write " + file.string());
  out << text;
  if (!out) throw IoError("write to " + file.string() + " failed");
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string to_csv(const SweepReport& report) {
  std::string out = "waveform,snr_db,doppler_hz,ber,fer,nmse,snr_spread\r\n";
  for (const auto& r : report.records) {
    out += csv_field(to_string(r.waveform));
    for (double v : {r.snr_db, r.doppler_hz, r.ber, r.fer, r.nmse, r.snr_spread}) {
      out += ',';
      out += csv_field(format_number(v));
    }
    out += "\r\n";
  }
  return out;
}

std::string to_json(const SweepReport& report) {
  ordered_json j;
  j["version"] = version();
  j["config"] = config_json(report.config);
  j["seeds"] = {{"master_seed", report.config.master_seed},
                {"rule", "frame f of every grid point uses seed master_seed + f"},
                {"generator", "std::mt19937_64"}};
  j["overhead_factor"] = report.config.overhead_factor();
  j["points"] = ordered_json::array();
  for (const auto& r : report.records) {
    ordered_json p;
    p["meta"] = {{"waveform", to_string(r.waveform)},
                 {"snr_db", number(r.snr_db)},
                 {"doppler_hz", number(r.doppler_hz)},
                 {"seed", r.seed}};
    p["ber"] = number(r.ber);
    p["fer"] = number(r.fer);
    p["nmse"] = number(r.nmse);
    p["snr_spread"] = number(r.snr_spread);
    p["frames"] = r.frames;
    p["frame_errors"] = r.frame_errors;
    p["failed_frames"] = r.failed_frames;
    p["bits"] = r.bits;
    p["bit_errors"] = r.bit_errors;
    p["noise_variance"] = number(r.noise_variance);
    p["tx_power"] = number(r.tx_power);
    p["per_symbol"] = {{"error_ratio", numbers(r.error_ratio)}, {"snr_db", numbers(r.snr_db_per_symbol)}};
    j["points"].push_back(std::move(p));
  }
  return j.dump(2) + "\n";
}

void write_report(const SweepReport& report, const std::filesystem::path& out_dir) {
  ensure_writable(out_dir);
  write_file(out_dir / "sweep.csv", to_csv(report));
  write_file(out_dir / "sweep.json", to_json(report));
}

SweepReport run_sweep(const SweepConfig& cfg, const std::filesystem::path& out_dir) {
  cfg.validate();
  ensure_writable(out_dir);
  SweepReport report = run_sweep(cfg);
  write_report(report, out_dir);
  return report;
}

}  // namespace gfdmkit
