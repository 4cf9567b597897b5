// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfdmkit Authors

#include "gfdmkit/otfs.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gfdmkit/errors.hpp"

namespace gfdmkit {

namespace {

ModulatorConfig equivalent_gfdm(const Window& tx, const OtfsParams& p) {
  ModulatorConfig cfg;
  cfg.params = p.as_gfdm();
  cfg.window = tx;
  cfg.spreading_enabled = true;
  cfg.transform_domain = Domain::time;
  cfg.allocation = Allocation::otfs;
  return cfg;
}

cplx doppler_phase(double nu, std::int64_t t) {
  const double cycles = nu * static_cast<double>(t);
  const double angle = 2.0 * std::numbers::pi * (cycles - std::floor(cycles));
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

void OtfsParams::validate() const {
  if (subcarriers == 0 || symbols == 0) throw ConfigError("otfs burst needs at least one symbol and subcarrier");
  if (cp_len >= subcarriers) {
    throw ConfigError("per-symbol prefix (" + std::to_string(cp_len) + ") must be shorter than the symbol (" +
                      std::to_string(subcarriers) + ")");
  }
}

OtfsFrame otfs_modulate(const ComplexGrid& data, const Window& tx, const OtfsParams& p) {
  p.validate();
  if (data.rows() != p.symbols || data.cols() != p.subcarriers) {
    throw ShapeError("otfs_modulate: data grid must be " + std::to_string(p.symbols) + "x" +
                     std::to_string(p.subcarriers));
  }
  // The inverse SFFT is exactly the GFDM spreading step with K = symbols;
  // only the final allocation differs from a GFDM block.
  OtfsFrame frame;
  frame.samples = modulate(data, equivalent_gfdm(tx, p));
  frame.samples_with_cp = add_cp_per_symbol(frame.samples, p);
  return frame;
}

ComplexVec add_cp_per_symbol(ConstSamples s, const OtfsParams& p) {
  if (s.size() != p.burst_len()) {
    throw ShapeError("add_cp_per_symbol: expected " + std::to_string(p.burst_len()) + " samples, got " +
                     std::to_string(s.size()));
  }
  ComplexVec out;
  out.reserve(p.burst_len_with_cp());
  for (std::size_t q = 0; q < p.symbols; ++q) {
    const auto symbol = s.subspan(q * p.subcarriers, p.subcarriers);
    out.insert(out.end(), symbol.end() - static_cast<std::ptrdiff_t>(p.cp_len), symbol.end());
    out.insert(out.end(), symbol.begin(), symbol.end());
  }
  return out;
}

ComplexGrid strip_cp_per_symbol(ConstSamples r, const OtfsParams& p) {
  if (r.size() != p.burst_len_with_cp()) {
    throw ShapeError("strip_cp_per_symbol: expected " + std::to_string(p.burst_len_with_cp()) +
                     " samples, got " + std::to_string(r.size()));
  }
  ComplexGrid y(p.subcarriers, p.symbols);
  for (std::size_t q = 0; q < p.symbols; ++q) {
    const std::size_t first = q * p.symbol_len_with_cp() + p.cp_len;
    for (std::size_t m = 0; m < p.subcarriers; ++m) y(m, q) = r[first + m];
  }
  return y;
}

OtfsEquivalentChannel equivalent_channel_otfs(const DelayDopplerChannel& ch, const OtfsParams& p,
                                              std::int64_t start_time) {
  p.validate();
  const std::size_t M = p.subcarriers;
  OtfsEquivalentChannel out{ComplexGrid(M, p.symbols), ch.max_delay() > p.cp_len};
  for (const auto& path : ch.paths()) {
    for (std::size_t q = 0; q < p.symbols; ++q) {
      const auto first = start_time + static_cast<std::int64_t>(p.cp_len + q * p.symbol_len_with_cp());
      cplx mean_phase{};
      if (path.doppler == 0.0) {
        mean_phase = 1.0;
      } else {
        for (std::size_t m = 0; m < M; ++m) mean_phase += doppler_phase(path.doppler, first + static_cast<std::int64_t>(m));
        mean_phase /= static_cast<double>(M);
      }
      const cplx tap = path.gain * mean_phase;
      for (std::size_t k = 0; k < M; ++k) {
        const double angle = -2.0 * std::numbers::pi * static_cast<double>((path.delay * k) % M) /
                             static_cast<double>(M);
        out.grid(k, q) += tap * cplx{std::cos(angle), std::sin(angle)};
      }
    }
  }
  return out;
}

Window otfs_equivalent_window(const Window& tx, const ComplexGrid& h_eq) {
  if (tx.domain != Domain::time) throw DomainError("otfs windows are time-domain windows");
  return {hadamard(h_eq.transposed(), tx.w), Domain::time};
}

ComplexGrid otfs_receive(ConstSamples r, const Window& tx, const ComplexGrid& h_eq, ReceiverKind kind,
                         double noise_to_symbol_ratio, const OtfsParams& p) {
  p.validate();
  if (h_eq.rows() != p.subcarriers || h_eq.cols() != p.symbols) {
    throw ShapeError("otfs_receive: equivalent channel must be " + std::to_string(p.subcarriers) + "x" +
                     std::to_string(p.symbols));
  }
  // vec() of the stripped grid is the burst without prefixes.
  const ComplexVec burst = vec(strip_cp_per_symbol(r, p));
  const Window rx = rx_window(otfs_equivalent_window(tx, h_eq), kind, noise_to_symbol_ratio);
  return demodulate(burst, rx, equivalent_gfdm(tx, p));
}

cplx otfs_symbol_gain(const Window& tx, const ComplexGrid& h_eq, ReceiverKind kind,
                      double noise_to_symbol_ratio) {
  const Window eq = otfs_equivalent_window(tx, h_eq);
  const Window rx = rx_window(eq, kind, noise_to_symbol_ratio);
  cplx acc{};
  const auto a = rx.w.data();
  const auto b = eq.w.data();
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc / static_cast<double>(a.size());
}

}  // namespace gfdmkit
