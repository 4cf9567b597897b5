// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfdmkit Authors

#include "gfdmkit/preset.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "gfdmkit/errors.hpp"
#include "yaml_util.hpp"

namespace gfdmkit {

namespace detail {

ChannelPreset preset_from_yaml(const YAML::Node& node) {
  if (!node.IsMap()) throw ConfigError("channel preset must be a mapping");
  ChannelPreset preset;
  preset.name = yaml_get_or<std::string>(node, "name", "");
  preset.sample_rate_hz = yaml_get<double>(node, "sample_rate_hz");
  preset.normalize_power = yaml_get_or<bool>(node, "normalize_power", true);
  const YAML::Node paths = node["paths"];
  if (!paths || !paths.IsSequence()) throw ConfigError("channel preset needs a 'paths' list");
  for (const auto& p : paths) {
    PresetPath path;
    if (p["delay_samples"]) {
      const auto d = yaml_get<long long>(p, "delay_samples");
      if (d < 0) throw ConfigError("path delay must be non-negative");
      path.delay_samples = static_cast<std::size_t>(d);
    } else if (p["delay_ns"]) {
      const double ns = yaml_get<double>(p, "delay_ns");
      if (ns < 0.0) throw ConfigError("path delay must be non-negative");
      path.delay_samples = static_cast<std::size_t>(std::llround(ns * 1e-9 * preset.sample_rate_hz));
    } else {
      throw ConfigError("path needs 'delay_samples' or 'delay_ns'");
    }
    path.gain_db = yaml_get_or<double>(p, "gain_db", 0.0);
    path.phase_deg = yaml_get_or<double>(p, "phase_deg", 0.0);
    path.doppler_hz = yaml_get_or<double>(p, "doppler_hz", 0.0);
    preset.paths.push_back(path);
  }
  preset.validate();
  return preset;
}

YAML::Node preset_to_yaml(const ChannelPreset& preset) {
  YAML::Node node;
  node["name"] = preset.name;
  node["sample_rate_hz"] = preset.sample_rate_hz;
  node["normalize_power"] = preset.normalize_power;
  for (const auto& p : preset.paths) {
    YAML::Node path;
    path["delay_samples"] = p.delay_samples;
    path["gain_db"] = p.gain_db;
    path["phase_deg"] = p.phase_deg;
    path["doppler_hz"] = p.doppler_hz;
    node["paths"].push_back(path);
  }
  return node;
}

}  // namespace detail

void ChannelPreset::validate() const {
  if (!(sample_rate_hz > 0.0)) throw ConfigError("sample_rate_hz must be positive");
  if (paths.empty()) throw ConfigError("channel preset has no paths");
}

DelayDopplerChannel ChannelPreset::channel() const {
  validate();
  double total = 0.0;
  for (const auto& p : paths) total += std::pow(10.0, p.gain_db / 10.0);
  const double norm = normalize_power ? 1.0 / std::sqrt(total) : 1.0;
  std::vector<Path> out;
  out.reserve(paths.size());
  for (const auto& p : paths) {
    const double amplitude = std::pow(10.0, p.gain_db / 20.0) * norm;
    out.push_back({p.delay_samples, std::polar(amplitude, p.phase_deg * std::numbers::pi / 180.0),
                   p.doppler_hz / sample_rate_hz});
  }
  return DelayDopplerChannel(std::move(out));
}

DelayDopplerChannel ChannelPreset::channel(double max_doppler_hz) const {
  double preset_max = 0.0;
  for (const auto& p : paths) preset_max = std::max(preset_max, std::abs(p.doppler_hz));
  ChannelPreset scaled = *this;
  for (std::size_t i = 0; i < scaled.paths.size(); ++i) {
    auto& p = scaled.paths[i];
    if (preset_max > 0.0) {
      p.doppler_hz = max_doppler_hz * p.doppler_hz / preset_max;
    } else {
      p.doppler_hz = max_doppler_hz * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                               static_cast<double>(paths.size()));
    }
  }
  return scaled.channel();
}

ChannelPreset parse_channel_preset(std::string_view yaml_text) {
  return detail::preset_from_yaml(detail::yaml_parse(std::string(yaml_text)));
}

ChannelPreset load_channel_preset(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot read channel preset " + file.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_channel_preset(text.str());
}

}  // namespace gfdmkit
