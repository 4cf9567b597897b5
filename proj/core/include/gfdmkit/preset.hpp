// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfdmkit Authors

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gfdmkit/channel.hpp"

namespace gfdmkit {

struct PresetPath {
  std::size_t delay_samples = 0;
  double gain_db = 0.0;
  double phase_deg = 0.0;
  double doppler_hz = 0.0;
};

/// Channel profile loaded from a YAML file:
///
///   name: three-path
///   sample_rate_hz: 8.0e6
///   normalize_power: true        # optional, default true
///   paths:
///     - {delay_samples: 0, gain_db: 0.0, doppler_hz: 100.0}
///     - {delay_ns: 625, gain_db: -3.0, doppler_hz: -70.0, phase_deg: 45}
///
/// A path gives its delay either in samples or in nanoseconds (rounded to
/// the nearest sample). Doppler is normalised by the sample rate at load.
struct ChannelPreset {
  std::string name;
  double sample_rate_hz = 1.0;
  bool normalize_power = true;
  std::vector<PresetPath> paths;

  /// Channel with the preset's own Doppler values.
  DelayDopplerChannel channel() const;

  /// Channel whose Dopplers are rescaled so the fastest path moves at
  /// `max_doppler_hz`, keeping the preset's relative ratios and signs. A
  /// preset without Doppler assigns f_d cos(2 pi i / P) to path i of P.
  DelayDopplerChannel channel(double max_doppler_hz) const;

  void validate() const;
};

ChannelPreset parse_channel_preset(std::string_view yaml_text);
/// Throws IoError if the file cannot be read, ConfigError if it is invalid.
ChannelPreset load_channel_preset(const std::filesystem::path& file);

}  // namespace gfdmkit
