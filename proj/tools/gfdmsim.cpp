// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfdmkit Authors

// gfdmsim: batch front end for the gfdmkit link simulator.
//
//   gfdmsim sweep --config sweep.yaml --out results/ [--seed N] [--threads N]
//   gfdmsim dump-window --config sweep.yaml --out windows/
//   gfdmsim selftest
//
// Failures print one JSON object {"error": <code>, "message": <text>} on
// stderr and exit nonzero.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <random>
#include <string>

#include "gfdmkit/errors.hpp"
#include "gfdmkit/harness.hpp"

namespace fs = std::filesystem;
using namespace gfdmkit;

namespace {

int fail(const std::string& code, const std::string& message, int status) {
  nlohmann::json j{{"error", code}, {"message", message}};
  std::cerr << j.dump() << '\n';
  return status;
}

int cmd_sweep(const fs::path& config, const fs::path& out, std::optional<std::uint64_t> seed,
              std::optional<unsigned> threads) {
  SweepConfig cfg = load_sweep_config(config);
  if (seed) cfg.master_seed = *seed;
  if (threads) cfg.threads = *threads;
  const SweepReport report = run_sweep(cfg, out);
  for (const auto& r : report.records) {
    std::printf("%s snr=%s doppler=%s ber=%s fer=%s nmse=%s spread=%s\n", to_string(r.waveform),
                format_number(r.snr_db).c_str(), format_number(r.doppler_hz).c_str(), format_number(r.ber).c_str(),
                format_number(r.fer).c_str(), format_number(r.nmse).c_str(), format_number(r.snr_spread).c_str());
  }
  std::printf("wrote %s and %s\n", (out / "sweep.csv").string().c_str(), (out / "sweep.json").string().c_str());
  return 0;
}

void write_text(const fs::path& file, const std::string& text) {
  std::ofstream f(file, std::ios::binary);
  if (!f) throw IoError("cannot write " + file.string());
  f << text;
}

int cmd_dump_window(const fs::path& config, const fs::path& out) {
  const SweepConfig cfg = load_sweep_config(config);
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec) throw IoError("cannot create " + out.string() + ": " + ec.message());
  const FrameParams frame = cfg.modem_frame();
  const PrototypePulse pulse = make_rc_pulse(frame, cfg.pulse_alpha);
  const Window w = tx_window(pulse, frame, cfg.transform_domain);

  std::string csv = "row,col,re,im,abs\r\n";
  for (std::size_t k = 0; k < w.w.rows(); ++k)
    for (std::size_t m = 0; m < w.w.cols(); ++m) {
      const cplx v = w.w(k, m);
      csv += std::to_string(k) + ',' + std::to_string(m) + ',' + format_number(v.real()) + ',' +
             format_number(v.imag()) + ',' + format_number(std::abs(v)) + "\r\n";
    }
  write_text(out / "window_tx.csv", csv);

  std::string pcsv = "n,time_re,time_im,spectrum_re,spectrum_im\r\n";
  for (std::size_t n = 0; n < pulse.size(); ++n) {
    pcsv += std::to_string(n) + ',' + format_number(pulse.time[n].real()) + ',' + format_number(pulse.time[n].imag()) +
            ',' + format_number(pulse.spectrum[n].real()) + ',' + format_number(pulse.spectrum[n].imag()) + "\r\n";
  }
  write_text(out / "pulse.csv", pcsv);
  std::printf("%s window %zux%zu (%s domain), alpha %s\n", to_string(cfg.waveform), w.w.rows(), w.w.cols(),
              to_string(w.domain), format_number(cfg.pulse_alpha).c_str());
  std::printf("wrote %s and %s\n", (out / "window_tx.csv").string().c_str(), (out / "pulse.csv").string().c_str());
  return 0;
}

ComplexGrid random_grid(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexGrid g(r, c);
  for (auto& v : g.data()) v = {n(rng), n(rng)};
  return g;
}

int cmd_selftest() {
  std::mt19937_64 rng(1);
  int failures = 0;
  auto check = [&](const char* name, const std::function<bool()>& fn) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      std::printf("FAIL %s (%s)\n", name, e.what());
      ++failures;
      return;
    }
    std::printf("%s %s\n", ok ? "ok  " : "FAIL", name);
    failures += ok ? 0 : 1;
  };

  check("dft round trip", [&] {
    for (std::size_t n : {1, 6, 64, 100, 2048}) {
      const ComplexVec x = vec(random_grid(1, n, rng));
      if (max_abs_diff(idft(dft(x)), x) > 1e-10) return false;
    }
    return true;
  });
  check("time and frequency transforms agree", [&] {
    const FrameParams f{16, 9, 0};
    const PrototypePulse g = make_rc_pulse(f, 0.3);
    ModulatorConfig td{f, tx_window(g, f, Domain::time)};
    ModulatorConfig fd{f, tx_window(g, f, Domain::frequency)};
    fd.transform_domain = Domain::frequency;
    const ComplexGrid d = random_grid(16, 9, rng);
    return max_abs_diff(modulate(d, td), modulate(d, fd)) < 1e-9;
  });
  check("zero-forcing reconstruction", [&] {
    const FrameParams f{8, 7, 0};
    ModulatorConfig cfg{f, tx_window(make_rc_pulse(f, 0.0), f, Domain::time)};
    const ComplexGrid d = random_grid(8, 7, rng);
    return max_abs_diff(demodulate(modulate(d, cfg), rx_window(cfg.window, ReceiverKind::zf), cfg), d) < 1e-9;
  });
  check("otfs burst is a permuted gfdm block", [&] {
    const OtfsParams p{32, 8, 0};
    const FrameParams f = p.as_gfdm();
    ModulatorConfig cfg{f, tx_window(make_rc_pulse(f, 0.0), f, Domain::time)};
    const ComplexGrid d = random_grid(8, 32, rng);
    return otfs_modulate(d, cfg.window, p).samples == commutation_apply(modulate(d, cfg), 32, 8);
  });
  for (Waveform w : {Waveform::ofdm, Waveform::gfdm, Waveform::otfs}) {
    const std::string name = std::string("noiseless ") + to_string(w) + " link";
    check(name.c_str(), [&] {
      SweepConfig cfg;
      cfg.waveform = w;
      cfg.frame = w == Waveform::ofdm ? FrameParams{128, 1, 16} : FrameParams{16, 8, 16};
      cfg.otfs = {32, 4, 8};
      cfg.channel.sample_rate_hz = 1e6;
      cfg.channel.paths = {{0, 0.0, 0.0, 0.0}, {3, -3.0, 30.0, 0.0}};
      cfg.frames_per_point = 4;
      const MetricsRecord r = run_point(cfg, INFINITY, 0.0);
      return r.ber == 0.0 && r.nmse < 1e-18;
    });
  }
  std::printf("%s\n", failures == 0 ? "selftest passed" : "selftest FAILED");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gfdmkit link simulator"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);

  fs::path config, out;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;

  auto* sweep = app.add_subcommand("sweep", "Run an SNR x Doppler sweep and write sweep.csv / sweep.json");
  sweep->add_option("--config", config, "Sweep configuration (YAML)")->required();
  sweep->add_option("--out", out, "Output directory")->required();
  sweep->add_option("--seed", seed, "Override master_seed");
  sweep->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* dump = app.add_subcommand("dump-window", "Write the transmit window and prototype pulse as CSV");
  dump->add_option("--config", config, "Sweep configuration (YAML)")->required();
  dump->add_option("--out", out, "Output directory")->required();

  auto* selftest = app.add_subcommand("selftest", "Quick numerical self-checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), 2);
  }

  try {
    if (sweep->parsed()) return cmd_sweep(config, out, seed, threads);
    if (dump->parsed()) return cmd_dump_window(config, out);
    if (selftest->parsed()) return cmd_selftest();
  } catch (const Error& e) {
    return fail(e.code(), e.what(), 1);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), 1);
  }
  return 0;
}
