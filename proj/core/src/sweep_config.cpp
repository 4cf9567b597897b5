// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfdmkit Authors

#include <cmath>
#include <fstream>
#include <sstream>

#include "gfdmkit/errors.hpp"
#include "gfdmkit/harness.hpp"
#include "yaml_util.hpp"

#ifndef GFDMKIT_VERSION
#define GFDMKIT_VERSION "unknown"
#endif

namespace gfdmkit {

using detail::yaml_get;
using detail::yaml_get_or;

const char* version() noexcept { return GFDMKIT_VERSION; }

const char* to_string(Waveform w) noexcept {
  switch (w) {
    case Waveform::ofdm: return "ofdm";
    case Waveform::gfdm: return "gfdm";
    case Waveform::otfs: return "otfs";
  }
  return "?";
}

Waveform parse_waveform(std::string_view s) {
  if (s == "ofdm") return Waveform::ofdm;
  if (s == "gfdm") return Waveform::gfdm;
  if (s == "otfs") return Waveform::otfs;
  throw ConfigError("unknown waveform '" + std::string(s) + "' (expected ofdm, gfdm or otfs)");
}

ReceiverKind parse_receiver(std::string_view s) {
  if (s == "mf" || s == "MF") return ReceiverKind::mf;
  if (s == "zf" || s == "ZF") return ReceiverKind::zf;
  if (s == "mmse" || s == "MMSE") return ReceiverKind::mmse;
  throw ConfigError("unknown receiver '" + std::string(s) + "' (expected mf, zf or mmse)");
}

namespace {

Domain parse_domain(std::string_view s) {
  if (s == "time") return Domain::time;
  if (s == "frequency") return Domain::frequency;
  throw ConfigError("unknown transform_domain '" + std::string(s) + "' (expected time or frequency)");
}

std::vector<double> number_list(const YAML::Node& node, const std::string& key) {
  const YAML::Node list = node[key];
  if (!list) throw ConfigError("missing key '" + key + "'");
  std::vector<double> out;
  try {
    if (list.IsSequence()) {
      for (const auto& v : list) out.push_back(v.as<double>());
    } else {
      out.push_back(list.as<double>());
    }
  } catch (const YAML::Exception& e) {
    throw ConfigError("key '" + key + "': " + e.msg);
  }
  return out;
}

}  // namespace

void SweepConfig::validate() const {
  if (waveform == Waveform::otfs) {
    otfs.validate();
    if (transform_domain != Domain::time) throw ConfigError("otfs runs on the time-domain transform only");
  } else {
    frame.validate();
    if (waveform == Waveform::ofdm && frame.subsymbols != 1) throw ConfigError("ofdm frames have one subsymbol");
  }
  if (!(pulse_alpha >= 0.0 && pulse_alpha <= 1.0)) throw ConfigError("pulse_alpha must lie in [0, 1]");
  if (snr_grid_db.empty()) throw ConfigError("snr_grid_db is empty");
  if (doppler_grid_hz.empty()) throw ConfigError("doppler_grid_hz is empty");
  for (double s : snr_grid_db) {
    if (std::isnan(s) || s == -INFINITY) throw ConfigError("snr_grid_db entries must be numbers or .inf");
  }
  for (double f : doppler_grid_hz) {
    if (!std::isfinite(f) || f < 0.0) throw ConfigError("doppler_grid_hz entries must be finite and non-negative");
  }
  if (frames_per_point < 1) throw ConfigError("frames_per_point must be at least 1");
  channel.validate();
}

FrameParams SweepConfig::modem_frame() const {
  if (waveform == Waveform::otfs) return otfs.as_gfdm();
  if (waveform == Waveform::ofdm) return {frame.subcarriers, 1, frame.cp_len};
  return frame;
}

std::size_t SweepConfig::symbols_per_frame() const { return modem_frame().block_len(); }

std::size_t SweepConfig::samples_per_frame() const {
  if (waveform == Waveform::otfs) return otfs.burst_len_with_cp();
  const FrameParams f = modem_frame();
  return f.block_len() + f.cp_len;
}

double SweepConfig::overhead_factor() const {
  if (waveform != Waveform::otfs) return 1.0;
  return static_cast<double>(otfs.burst_len_with_cp()) / static_cast<double>(otfs.burst_len() + otfs.cp_len);
}

SweepConfig parse_sweep_config(std::string_view yaml_text, const std::filesystem::path& base_dir) {
  const YAML::Node root = detail::yaml_parse(std::string(yaml_text));
  if (!root.IsMap()) throw ConfigError("sweep config must be a mapping");
  SweepConfig cfg;
  cfg.waveform = parse_waveform(yaml_get<std::string>(root, "waveform"));

  const YAML::Node frame = root["frame"];
  if (!frame || !frame.IsMap()) throw ConfigError("missing 'frame' mapping");
  const auto cp = yaml_get_or<std::size_t>(frame, "cp_len", 0);
  switch (cfg.waveform) {
    case Waveform::otfs:
      cfg.otfs = {yaml_get<std::size_t>(frame, "subcarriers"), yaml_get<std::size_t>(frame, "symbols"), cp};
      break;
    case Waveform::ofdm:
      cfg.frame = {yaml_get<std::size_t>(frame, "subcarriers"), 1, cp};
      break;
    case Waveform::gfdm:
      cfg.frame = {yaml_get<std::size_t>(frame, "subcarriers"), yaml_get<std::size_t>(frame, "subsymbols"), cp};
      break;
  }

  cfg.pulse_alpha = yaml_get_or<double>(root, "pulse_alpha", 0.0);
  cfg.receiver = parse_receiver(yaml_get_or<std::string>(root, "receiver", "mmse"));
  cfg.transform_domain = parse_domain(yaml_get_or<std::string>(root, "transform_domain", "time"));
  cfg.spreading = yaml_get_or<bool>(root, "spreading", true);
  cfg.snr_grid_db = number_list(root, "snr_grid_db");
  cfg.doppler_grid_hz = root["doppler_grid_hz"] ? number_list(root, "doppler_grid_hz") : std::vector<double>{0.0};
  cfg.frames_per_point = yaml_get_or<std::size_t>(root, "frames_per_point", 100);
  cfg.master_seed = yaml_get_or<std::uint64_t>(root, "master_seed", 1);
  cfg.threads = yaml_get_or<unsigned>(root, "threads", 0);

  if (root["channel_preset"]) {
    cfg.channel_preset_path = yaml_get<std::string>(root, "channel_preset");
    std::filesystem::path p(cfg.channel_preset_path);
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    cfg.channel = load_channel_preset(p);
  } else if (root["channel"]) {
    cfg.channel = detail::preset_from_yaml(root["channel"]);
  } else {
    throw ConfigError("config needs 'channel_preset' or an inline 'channel'");
  }

  cfg.validate();
  return cfg;
}

SweepConfig load_sweep_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot read config " + file.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_sweep_config(text.str(), file.parent_path());
}

}  // namespace gfdmkit
