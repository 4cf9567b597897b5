// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfdmkit Authors

// Acceptance suite: one PASS/FAIL line per criterion. Pass criterion ids
// (AC1 ... AC9) as arguments to run a subset.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include <unistd.h>

#include "../oracles.hpp"
#include "gfdmkit/channel.hpp"
#include "gfdmkit/gfdm.hpp"
#include "gfdmkit/harness.hpp"
#include "gfdmkit/otfs.hpp"

using namespace gfdmkit;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

const FrameParams kSmallShapes[] = {{2, 2, 0}, {4, 3, 0}, {4, 4, 0}, {8, 2, 0}};

ModulatorConfig modem(const FrameParams& p, const Window& w) {
  ModulatorConfig cfg;
  cfg.params = p;
  cfg.window = w;
  cfg.transform_domain = w.domain;
  return cfg;
}

PrototypePulse random_pulse(oracle::Gen& gen, std::size_t n) {
  return PrototypePulse::from_time(gen.vec(n), true);
}

Outcome ac1() {
  const auto start = std::chrono::steady_clock::now();
  oracle::Gen gen(101);
  double worst_mod = 0.0, worst_demod = 0.0, worst_fact = 0.0, worst_dense = 0.0;
  for (const auto& p : kSmallShapes) {
    const std::size_t K = p.subcarriers, M = p.subsymbols;
    for (int trial = 0; trial < 5; ++trial) {
      const PrototypePulse g = random_pulse(gen, p.block_len());
      const PrototypePulse gamma = random_pulse(gen, p.block_len());
      const oracle::Dense a = oracle::gfdm_matrix(g.time, K, M);
      const oracle::Dense b = oracle::gfdm_matrix(gamma.time, K, M);
      const ComplexGrid d = gen.grid(K, M);
      const ComplexVec y = gen.vec(p.block_len());
      const ComplexVec expected_x = oracle::apply(a, oracle::colmajor(d));
      const ComplexVec expected_d = oracle::apply(oracle::herm(b), y);
      for (Domain dom : {Domain::time, Domain::frequency}) {
        const auto cfg = modem(p, tx_window(g, p, dom));
        worst_mod = std::max(worst_mod, oracle::max_abs_diff(modulate(d, cfg), expected_x));
        const ComplexGrid dh = demodulate(y, rx_window_from_pulse(gamma, p, dom), cfg);
        worst_demod = std::max(worst_demod, oracle::max_abs_diff(oracle::colmajor(dh), expected_d));
      }
      worst_fact = std::max(worst_fact, oracle::max_abs_diff(oracle::gfdm_matrix_factored(g.time, K, M), a));
      const ComplexGrid lib_a = build_matrix_A(g, p);
      oracle::Dense la(lib_a.rows(), lib_a.cols());
      for (std::size_t i = 0; i < la.n; ++i)
        for (std::size_t j = 0; j < la.m; ++j) la(i, j) = lib_a(i, j);
      worst_dense = std::max(worst_dense, oracle::max_abs_diff(la, a));
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double worst = std::max({worst_mod, worst_demod, worst_fact, worst_dense});
  return {worst < 1e-10 && secs < 10.0,
          "mod " + fmt("%.2e", worst_mod) + ", demod " + fmt("%.2e", worst_demod) + ", factorised " +
              fmt("%.2e", worst_fact) + ", build_matrix_A " + fmt("%.2e", worst_dense) + " (tol 1e-10), " +
              fmt("%.2f s", secs)};
}

Outcome ac2() {
  oracle::Gen gen(202);
  double worst_td_fd = 0.0, worst_zf = 0.0;
  std::size_t zf_cases = 0, skipped = 0;
  const FrameParams shapes[] = {{2, 2, 0}, {4, 3, 0}, {4, 4, 0}, {8, 2, 0}, {16, 8, 0}, {16, 15, 0}};
  for (const auto& p : shapes) {
    for (int b = 0; b < 100; ++b) {
      const PrototypePulse g = b % 2 == 0 ? random_pulse(gen, p.block_len()) : make_rc_pulse(p, gen.real(0.0, 1.0));
      const auto td = modem(p, tx_window(g, p, Domain::time));
      const auto fd = modem(p, tx_window(g, p, Domain::frequency));
      const ComplexGrid d = gen.grid(p.subcarriers, p.subsymbols);
      const ComplexVec x = modulate(d, td);
      worst_td_fd = std::max(worst_td_fd, oracle::max_abs_diff(x, modulate(d, fd)));
      for (const auto* cfg : {&td, &fd}) {
        double min_w = INFINITY;
        for (const cplx& w : cfg->window.w.data()) min_w = std::min(min_w, std::abs(w));
        if (min_w <= kZfSingularityThreshold) {
          ++skipped;
          continue;
        }
        const ComplexGrid dh = demodulate(x, rx_window(cfg->window, ReceiverKind::zf), *cfg);
        worst_zf = std::max(worst_zf, max_abs_diff(dh, d));
        ++zf_cases;
      }
    }
  }
  return {worst_td_fd < 1e-9 && worst_zf < 1e-9 && zf_cases > 0,
          "TD vs FD " + fmt("%.2e", worst_td_fd) + ", ZF reconstruction " + fmt("%.2e", worst_zf) + " over " +
              std::to_string(zf_cases) + " blocks (" + std::to_string(skipped) + " singular windows skipped), tol 1e-9"};
}

Outcome ac3() {
  oracle::Gen gen(303);
  std::size_t mismatches = 0, grids = 0;
  for (auto [n_o, m_o] : {std::pair<std::size_t, std::size_t>{4, 8}, {16, 128}}) {
    const OtfsParams p{m_o, n_o, 0};
    const FrameParams fp = p.as_gfdm();
    const Window w = tx_window(make_rc_pulse(fp, 0.0), fp, Domain::time);
    const oracle::Dense pi = oracle::commutation(m_o, n_o);
    for (int t = 0; t < 100; ++t) {
      const ComplexGrid d = gen.grid(n_o, m_o);
      const ComplexVec s = otfs_modulate(d, w, p).samples;
      const ComplexVec x_o = modulate(d, modem(fp, w));
      // Permutation applied by the dense 0/1 matrix: each output picks one input.
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::size_t hits = 0;
        cplx picked{};
        for (std::size_t j = 0; j < x_o.size(); ++j) {
          if (pi(i, j) == cplx{1.0, 0.0}) {
            picked = x_o[j];
            ++hits;
          }
        }
        if (hits != 1 || picked != s[i]) ++mismatches;
      }
      ++grids;
    }
  }
  return {mismatches == 0, std::to_string(grids) + " grids, " + std::to_string(mismatches) + " samples differ (bit-exact)"};
}

Outcome ac4() {
  oracle::Gen gen(404);
  const FrameParams p{4, 3, 0};
  double worst = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    const PrototypePulse g = trial == 0 ? make_rc_pulse(p, 0.5) : random_pulse(gen, p.block_len());
    const oracle::Dense a = oracle::gfdm_matrix(g.time, p.subcarriers, p.subsymbols);
    const ComplexVec y = gen.vec(p.block_len());
    for (double r : {0.01, 0.1, 1.0}) {
      const ComplexVec expected = oracle::apply(oracle::mmse_matrix(a, r), y);
      for (Domain dom : {Domain::time, Domain::frequency}) {
        const Window tx = tx_window(g, p, dom);
        const ComplexGrid dh = demodulate(y, rx_window(tx, ReceiverKind::mmse, r), modem(p, tx));
        worst = std::max(worst, oracle::max_abs_diff(oracle::colmajor(dh), expected));
      }
    }
  }
  return {worst < 1e-8, "max deviation from (A^H A + r I)^-1 A^H y: " + fmt("%.2e", worst) + " (tol 1e-8)"};
}

double doppler_residual(double n_nu, std::size_t N, std::size_t cp) {
  // Same paths, data and noise-free blocks for every Doppler level.
  oracle::Gen gen(505);
  double residual = 0.0, total = 0.0;
  for (int b = 0; b < 20; ++b) {
    const ComplexVec x = gen.vec(N);
    std::vector<Path> paths{{0, {1.0, 0.0}, 1.0}, {3, {0.0, 0.6}, -0.7}, {7, {0.3, -0.2}, 0.4}};
    for (auto& p : paths) p.doppler *= n_nu / static_cast<double>(N);
    const DelayDopplerChannel ch(paths);
    const auto t0 = static_cast<std::int64_t>(b * (N + cp));
    const ComplexVec y = remove_cp_block(apply_ltv(add_cp_block(x, cp), ch, t0), cp, N);
    const ComplexVec h = equivalent_channel_gfdm(ch, N, cp, t0);
    const ComplexVec Y = dft(y), X = dft(x);
    for (std::size_t f = 0; f < N; ++f) {
      residual += std::norm(Y[f] - h[f] * X[f]);
      total += std::norm(Y[f]);
    }
  }
  return residual / total;
}

Outcome ac5() {
  oracle::Gen gen(505);
  const std::size_t N = 128, cp = 16;
  double worst = 0.0, worst_h = 0.0;
  for (int t = 0; t < 50; ++t) {
    const DelayDopplerChannel ch = gen.channel(gen.size(1, 5), cp - 1, 0.0);
    const ComplexVec x = gen.vec(N);
    const auto t0 = static_cast<std::int64_t>(gen.size(0, 100000));
    const ComplexVec y = remove_cp_block(apply_ltv(add_cp_block(x, cp), ch, t0), cp, N);
    const ComplexVec h = equivalent_channel_gfdm(ch, N, cp, t0);
    const ComplexVec X = oracle::dft(x), Y = oracle::dft(y);
    for (std::size_t f = 0; f < N; ++f) worst = std::max(worst, std::abs(Y[f] - h[f] * X[f]));
    worst_h = std::max(worst_h, oracle::max_abs_diff(h, oracle::equivalent_channel_direct(ch, N, cp, t0)));
  }
  const double r1 = doppler_residual(1e-3, N, cp), r2 = doppler_residual(1e-2, N, cp),
               r3 = doppler_residual(1e-1, N, cp);
  const bool pass = worst < 1e-10 && worst_h < 1e-10 && r1 < r2 && r2 < r3;
  return {pass, "static one-tap " + fmt("%.2e", worst) + ", h~ vs direct sum " + fmt("%.2e", worst_h) +
                    " (tol 1e-10); Doppler residual " + fmt("%.3e", r1) + " < " + fmt("%.3e", r2) + " < " +
                    fmt("%.3e", r3)};
}

ChannelPreset flat_preset() {
  ChannelPreset c;
  c.name = "flat";
  c.sample_rate_hz = 8e6;
  c.paths = {{0, 0.0, 0.0, 0.0}};
  return c;
}

ChannelPreset three_path_preset() {
  ChannelPreset c;
  c.name = "three-path";
  c.sample_rate_hz = 8e6;
  c.paths = {{0, 0.0, 0.0, 1.0}, {5, -3.0, 0.0, -0.7}, {12, -6.0, 0.0, 0.3}};
  return c;
}

Outcome ac6() {
  const auto start = std::chrono::steady_clock::now();
  SweepConfig cfg;
  cfg.waveform = Waveform::ofdm;
  cfg.frame = {2048, 1, 32};
  cfg.receiver = ReceiverKind::zf;
  cfg.channel = flat_preset();
  cfg.frames_per_point = 128;
  cfg.master_seed = 6;
  bool pass = true;
  std::string detail;
  for (double snr : {10.0, 14.0}) {
    const MetricsRecord r = run_point(cfg, snr, 0.0);
    const double theory = oracle::qam16_ber(std::pow(10.0, snr / 10.0));
    const double rel = std::abs(r.ber - theory) / theory;
    pass = pass && rel < 0.05 && r.bits >= 1000000;
    detail += fmt("%.0f dB: ", snr) + fmt("BER %.4e", r.ber) + fmt(" vs %.4e", theory) + fmt(" (%.2f%%), ", 100 * rel) +
              std::to_string(r.bits) + " bits; ";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {pass && secs < 120.0, detail + fmt("%.1f s", secs)};
}

Outcome ac7() {
  const auto start = std::chrono::steady_clock::now();
  SweepConfig otfs;
  otfs.waveform = Waveform::otfs;
  otfs.otfs = {128, 16, 32};
  otfs.receiver = ReceiverKind::mmse;
  otfs.channel = three_path_preset();
  otfs.frames_per_point = 2000;
  otfs.master_seed = 7;
  SweepConfig ofdm = otfs;
  ofdm.waveform = Waveform::ofdm;
  ofdm.frame = {2048, 1, 32};
  ofdm.receiver = ReceiverKind::zf;
  const double snr = 15.0;
  const MetricsRecord ro = run_point(otfs, snr, 0.0);
  const MetricsRecord rf = run_point(ofdm, snr, 0.0);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool pass = ro.snr_spread < 0.05 && rf.snr_spread > 0.20 && ro.frames >= 200 && secs < 300.0;
  return {pass, "OTFS-MMSE spread " + fmt("%.2f%%", 100 * ro.snr_spread) + " (< 5%), OFDM-ZF spread " +
                    fmt("%.1f%%", 100 * rf.snr_spread) + " (> 20%), " + std::to_string(ro.frames) + " frames, " +
                    fmt("%.1f s", secs)};
}

Outcome ac8() {
  const auto start = std::chrono::steady_clock::now();
  SweepConfig otfs;
  otfs.waveform = Waveform::otfs;
  otfs.otfs = {128, 16, 32};
  otfs.receiver = ReceiverKind::mmse;
  otfs.channel = three_path_preset();
  otfs.frames_per_point = 64;
  otfs.master_seed = 8;
  SweepConfig gfdm = otfs;
  gfdm.waveform = Waveform::gfdm;
  gfdm.frame = {16, 128, 32};
  const double N = 2048.0, fs = otfs.channel.sample_rate_hz;
  const double small = 0.01 * fs / N, large = 0.3 * fs / N;
  const double snr = 18.0;
  const MetricsRecord o1 = run_point(otfs, snr, small), o2 = run_point(otfs, snr, large);
  const MetricsRecord g1 = run_point(gfdm, snr, small), g2 = run_point(gfdm, snr, large);
  const double d_otfs = o2.ber - o1.ber, d_gfdm = g2.ber - g1.ber;
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool pass = d_otfs < d_gfdm && o1.bits >= 100000 && g1.bits >= 100000 && secs < 600.0;
  return {pass, "N*nu 0.01 -> 0.3: OTFS BER " + fmt("%.3e", o1.ber) + fmt(" -> %.3e", o2.ber) + ", long-GFDM BER " +
                    fmt("%.3e", g1.ber) + fmt(" -> %.3e", g2.ber) + "; " + std::to_string(o1.bits) +
                    " bits/point, " + fmt("%.1f s", secs)};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome ac9() {
  const auto base = std::filesystem::temp_directory_path() / ("gfdmkit-ac9-" + std::to_string(::getpid()));
  bool pass = true;
  std::string detail;
  for (Waveform w : {Waveform::ofdm, Waveform::gfdm, Waveform::otfs}) {
    SweepConfig cfg;
    cfg.waveform = w;
    cfg.frame = w == Waveform::ofdm ? FrameParams{64, 1, 8} : FrameParams{8, 8, 8};
    cfg.otfs = {16, 4, 4};
    cfg.channel = three_path_preset();
    cfg.channel.paths[2].delay_samples = 3;
    cfg.channel.paths[1].delay_samples = 2;
    cfg.snr_grid_db = {6.0, 12.0};
    cfg.doppler_grid_hz = {0.0, 2000.0};
    cfg.frames_per_point = 20;
    cfg.master_seed = 99;
    cfg.threads = 1;
    run_sweep(cfg, base / "a");
    cfg.threads = 4;
    run_sweep(cfg, base / "b");
    const bool same = slurp(base / "a" / "sweep.csv") == slurp(base / "b" / "sweep.csv") &&
                      slurp(base / "a" / "sweep.json") == slurp(base / "b" / "sweep.json");
    pass = pass && same;
    detail += std::string(to_string(w)) + (same ? " identical; " : " DIFFERS; ");
  }
  std::filesystem::remove_all(base);
  return {pass, detail + "CSV and JSON compared byte for byte across reruns with 1 and 4 threads"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
      {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}};
  std::set<std::string> only(argv + 1, argv + argc);
  int failures = 0;
  for (const auto& [id, fn] : criteria) {
    if (!only.empty() && !only.count(id)) continue;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s  %s\n", o.pass ? "PASS" : "FAIL", id.c_str(), o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
