// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfdmkit Authors

#pragma once

#include <yaml-cpp/yaml.h>

#include <string>

#include "gfdmkit/errors.hpp"

namespace gfdmkit::detail {

template <typename T>
T yaml_get(const YAML::Node& node, const std::string& key) {
  const YAML::Node value = node[key];
  if (!value) throw ConfigError("missing key '" + key + "'");
  try {
    return value.as<T>();
  } catch (const YAML::Exception& e) {
    throw ConfigError("key '" + key + "': " + e.msg);
  }
}

template <typename T>
T yaml_get_or(const YAML::Node& node, const std::string& key, T fallback) {
  const YAML::Node value = node[key];
  if (!value) return fallback;
  try {
    return value.as<T>();
  } catch (const YAML::Exception& e) {
    throw ConfigError("key '" + key + "': " + e.msg);
  }
}

inline YAML::Node yaml_parse(const std::string& text) {
  try {
    return YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ConfigError("malformed YAML: " + e.msg);
  }
}

}  // namespace gfdmkit::detail

#include "gfdmkit/preset.hpp"

namespace gfdmkit::detail {

ChannelPreset preset_from_yaml(const YAML::Node& node);
YAML::Node preset_to_yaml(const ChannelPreset& preset);

}  // namespace gfdmkit::detail
