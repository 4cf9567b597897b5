// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfdmkit Authors

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gfdmkit/numerics.hpp"

namespace gfdmkit {

/// Per-position error statistics across frames.
///
/// `error_ratio[n]` is E|d^_n - d_n|^2 / E|d_n|^2, the error-to-signal ratio.
/// `snr_db[n]` is its inverse in dB (+inf where the error is zero).
struct PerSymbolSnr {
  std::vector<double> error_ratio;
  std::vector<double> snr_db;
};

/// Running sums of |d^ - d|^2 and |d|^2 per symbol position. Two
/// accumulators merge exactly, which lets workers keep private partials.
class SymbolErrorAccumulator {
 public:
  explicit SymbolErrorAccumulator(std::size_t positions = 0);

  void add(ConstSamples estimate, ConstSamples reference);
  void merge(const SymbolErrorAccumulator& other);

  std::size_t positions() const noexcept { return error_.size(); }
  std::size_t frames() const noexcept { return frames_; }

  std::span<const double> error_power() const noexcept { return error_; }
  std::span<const double> signal_power() const noexcept { return signal_; }

  /// sum ||d^ - d||^2 / sum ||d||^2 over all frames.
  double nmse() const;
  /// Throws StatisticsError with fewer than two frames.
  PerSymbolSnr per_symbol() const;

 private:
  std::vector<double> error_;
  std::vector<double> signal_;
  std::size_t frames_ = 0;
};

/// Per-position error ratio over a set of frames (at least two).
PerSymbolSnr per_symbol_snr(std::span<const ComplexGrid> estimates, std::span<const ComplexGrid> references);

/// Normalised mean-squared error over a set of frames.
double nmse(std::span<const ComplexGrid> estimates, std::span<const ComplexGrid> references);

/// Population standard deviation divided by the mean; 0 for a zero mean.
double relative_spread(std::span<const double> values);

}  // namespace gfdmkit
