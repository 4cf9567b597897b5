// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfdmkit Authors

#include "gfdmkit/metrics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gfdmkit/errors.hpp"

namespace gfdmkit {

namespace {

SymbolErrorAccumulator accumulate(std::span<const ComplexGrid> estimates, std::span<const ComplexGrid> references) {
  if (estimates.size() != references.size()) throw ShapeError("estimate and reference frame counts differ");
  if (estimates.empty()) throw StatisticsError("no frames");
  SymbolErrorAccumulator acc(references.front().size());
  for (std::size_t f = 0; f < estimates.size(); ++f) acc.add(estimates[f].data(), references[f].data());
  return acc;
}

}  // namespace

SymbolErrorAccumulator::SymbolErrorAccumulator(std::size_t positions)
    : error_(positions, 0.0), signal_(positions, 0.0) {}

void SymbolErrorAccumulator::add(ConstSamples estimate, ConstSamples reference) {
  if (estimate.size() != reference.size() || reference.size() != error_.size()) {
    throw ShapeError("frame has " + std::to_string(estimate.size()) + " estimates and " +
                     std::to_string(reference.size()) + " references, accumulator tracks " +
                     std::to_string(error_.size()));
  }
  for (std::size_t n = 0; n < error_.size(); ++n) {
    error_[n] += std::norm(estimate[n] - reference[n]);
    signal_[n] += std::norm(reference[n]);
  }
  ++frames_;
}

void SymbolErrorAccumulator::merge(const SymbolErrorAccumulator& other) {
  if (other.frames_ == 0) return;
  if (frames_ == 0 && error_.empty()) {
    *this = other;
    return;
  }
  if (other.error_.size() != error_.size()) throw ShapeError("cannot merge accumulators of different sizes");
  for (std::size_t n = 0; n < error_.size(); ++n) {
    error_[n] += other.error_[n];
    signal_[n] += other.signal_[n];
  }
  frames_ += other.frames_;
}

double SymbolErrorAccumulator::nmse() const {
  double e = 0.0;
  double s = 0.0;
  for (std::size_t n = 0; n < error_.size(); ++n) {
    e += error_[n];
    s += signal_[n];
  }
  if (s == 0.0) throw StatisticsError("reference frames carry no energy");
  return e / s;
}

PerSymbolSnr SymbolErrorAccumulator::per_symbol() const {
  if (frames_ < 2) throw StatisticsError("per-symbol statistics need at least two frames, got " + std::to_string(frames_));
  PerSymbolSnr out;
  out.error_ratio.resize(error_.size());
  out.snr_db.resize(error_.size());
  for (std::size_t n = 0; n < error_.size(); ++n) {
    const double ratio = signal_[n] > 0.0 ? error_[n] / signal_[n] : std::numeric_limits<double>::quiet_NaN();
    out.error_ratio[n] = ratio;
    out.snr_db[n] = ratio > 0.0 ? -10.0 * std::log10(ratio) : std::numeric_limits<double>::infinity();
  }
  return out;
}

PerSymbolSnr per_symbol_snr(std::span<const ComplexGrid> estimates, std::span<const ComplexGrid> references) {
  return accumulate(estimates, references).per_symbol();
}

double nmse(std::span<const ComplexGrid> estimates, std::span<const ComplexGrid> references) {
  return accumulate(estimates, references).nmse();
}

double relative_spread(std::span<const double> values) {
  if (values.empty()) return 0.0;
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  if (mean == 0.0) return 0.0;
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  var /= static_cast<double>(values.size());
  return std::sqrt(var) / std::abs(mean);
}

}  // namespace gfdmkit
