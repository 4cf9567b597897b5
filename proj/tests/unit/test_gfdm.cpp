// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfdmkit Authors

#include <doctest.h>

#include "gfdmkit/errors.hpp"
#include "gfdmkit/gfdm.hpp"
#include "gfdmkit/metrics.hpp"
#include "oracles.hpp"

using namespace gfdmkit;

namespace {

ModulatorConfig modem(const FrameParams& p, const Window& w, bool spreading = true) {
  ModulatorConfig cfg;
  cfg.params = p;
  cfg.window = w;
  cfg.transform_domain = w.domain;
  cfg.spreading_enabled = spreading;
  return cfg;
}

oracle::Dense to_dense(const ComplexGrid& g) {
  oracle::Dense d(g.rows(), g.cols());
  for (std::size_t i = 0; i < d.n; ++i)
    for (std::size_t j = 0; j < d.m; ++j) d(i, j) = g(i, j);
  return d;
}

}  // namespace

TEST_CASE("frame parameters are validated") {
  CHECK_NOTHROW((FrameParams{4, 3, 11}).validate());
  CHECK_THROWS_AS((FrameParams{0, 3, 0}).validate(), ConfigError);
  CHECK_THROWS_AS((FrameParams{4, 0, 0}).validate(), ConfigError);
  CHECK_THROWS_AS((FrameParams{4, 3, 12}).validate(), ConfigError);
  CHECK((FrameParams{16, 8, 32}).block_len() == 128);
}

TEST_CASE("pulse spectrum is the DFT of the time samples") {
  oracle::Gen gen(21);
  const PrototypePulse p = PrototypePulse::from_time(gen.vec(24), true);
  CHECK(std::abs(squared_norm(p.time) - 1.0) < 1e-12);
  CHECK(oracle::max_abs_diff(p.spectrum, oracle::dft(p.time)) < 1e-10);
  const PrototypePulse q = PrototypePulse::from_spectrum(p.spectrum);
  CHECK(oracle::max_abs_diff(q.time, p.time) < 1e-12);
}

TEST_CASE("raised-cosine pulse") {
  SUBCASE("alpha 0 gate has M equal bins") {
    const PrototypePulse p = make_rc_pulse({4, 2, 0}, 0.0);
    std::size_t nonzero = 0;
    double mag = -1.0;
    for (const cplx& v : p.spectrum) {
      if (std::abs(v) < 1e-12) continue;
      ++nonzero;
      if (mag < 0) mag = std::abs(v);
      CHECK(std::abs(std::abs(v) - mag) < 1e-12);
    }
    CHECK(nonzero == 2);
    CHECK(std::abs(squared_norm(p.time) - 1.0) < 1e-12);
  }
  SUBCASE("M = 1 is a single bin and a constant-modulus exponential") {
    const PrototypePulse p = make_rc_pulse({8, 1, 0}, 0.0);
    std::size_t nonzero = 0;
    for (const cplx& v : p.spectrum) nonzero += std::abs(v) > 1e-12;
    CHECK(nonzero == 1);
    for (const cplx& v : p.time) CHECK(std::abs(std::abs(v) - 1.0 / std::sqrt(8.0)) < 1e-12);
  }
  SUBCASE("alpha 0.5 spectrum obeys Parseval and is symmetric about its centre") {
    const FrameParams f{8, 4, 0};
    const PrototypePulse p = make_rc_pulse(f, 0.5);
    const std::size_t N = f.block_len();
    CHECK(std::abs(squared_norm(p.spectrum) - static_cast<double>(N)) < 1e-9);
    // Centre at -1/2 for even M: bin b mirrors bin -1-b.
    for (std::size_t b = 0; b < N; ++b) CHECK(std::abs(p.spectrum[b] - p.spectrum[(2 * N - 1 - b) % N]) < 1e-12);
    std::size_t nonzero = 0;
    for (const cplx& v : p.spectrum) nonzero += std::abs(v) > 1e-12;
    CHECK(nonzero > 4);
    CHECK(nonzero <= 6);
  }
  SUBCASE("odd M is symmetric about bin 0") {
    const FrameParams f{4, 5, 0};
    const PrototypePulse p = make_rc_pulse(f, 0.4);
    const std::size_t N = f.block_len();
    for (std::size_t b = 1; b < N; ++b) CHECK(std::abs(p.spectrum[b] - p.spectrum[N - b]) < 1e-12);
  }
  CHECK_THROWS_AS(make_rc_pulse({4, 2, 0}, -0.1), ParameterError);
  CHECK_THROWS_AS(make_rc_pulse({4, 2, 0}, 1.5), ParameterError);
}

TEST_CASE("transmit windows") {
  const FrameParams f{2, 2, 0};
  ComplexVec impulse(4);
  impulse[0] = 1.0;
  const Window w = tx_window(PrototypePulse::from_time(impulse), f, Domain::time);
  CHECK(w.w.rows() == 2);
  CHECK(w.w.cols() == 2);
  CHECK(std::abs(w.w(0, 0) - 2.0) < 1e-15);
  CHECK(std::abs(w.w(0, 1) - 2.0) < 1e-15);
  CHECK(std::abs(w.w(1, 0)) < 1e-15);
  CHECK(std::abs(w.w(1, 1)) < 1e-15);

  for (Domain d : {Domain::time, Domain::frequency}) {
    const Window z = tx_window(PrototypePulse::from_time(ComplexVec(12)), {4, 3, 0}, d);
    for (const cplx& v : z.w.data()) CHECK(v == cplx{});
  }
  CHECK_THROWS_AS(tx_window(PrototypePulse::from_time(ComplexVec(5)), f, Domain::time), ShapeError);

  oracle::Gen gen(22);
  for (Domain d : {Domain::time, Domain::frequency}) {
    const PrototypePulse g = PrototypePulse::from_time(gen.vec(12));
    const PrototypePulse back = pulse_from_tx_window(tx_window(g, {4, 3, 0}, d));
    CHECK(oracle::max_abs_diff(back.time, g.time) < 1e-12);
    const PrototypePulse gamma = pulse_from_rx_window(rx_window_from_pulse(g, {4, 3, 0}, d));
    CHECK(oracle::max_abs_diff(gamma.time, g.time) < 1e-12);
  }
}

TEST_CASE("alpha 0 windows have constant modulus sqrt(K)") {
  for (const FrameParams f : {FrameParams{4, 3, 0}, FrameParams{16, 8, 0}, FrameParams{16, 128, 0}}) {
    const Window w = tx_window(make_rc_pulse(f, 0.0), f, Domain::time);
    for (const cplx& v : w.w.data())
      CHECK(std::abs(std::abs(v) - std::sqrt(static_cast<double>(f.subcarriers))) < 1e-9);
  }
}

TEST_CASE("spreading") {
  const std::size_t K = 4, M = 3;
  CHECK(oracle::all_zero(spread(ComplexGrid(K, M))));
  CHECK(oracle::all_zero(despread(ComplexGrid(K, M))));
  ComplexGrid e(K, M);
  e(0, 0) = 1.0;
  const ComplexGrid s = spread(e);
  for (const cplx& v : s.data()) CHECK(std::abs(v - 0.25) < 1e-15);
  CHECK(max_abs_diff(despread(s), e) < 1e-15);

  oracle::Gen gen(23);
  const ComplexGrid d = gen.grid(16, 8);
  CHECK(max_abs_diff(despread(spread(d)), d) < 1e-10);
  CHECK(max_abs_diff(spread(despread(d)), d) < 1e-10);
}

TEST_CASE("property: despreading equalises noise power across positions") {
  const std::size_t K = 4, M = 6;
  oracle::Gen gen(24);
  std::vector<double> sigma2(K * M);
  double total = 0.0;
  for (auto& s : sigma2) total += (s = gen.real(0.1, 5.0));
  std::vector<double> power(K * M);
  const int draws = 20000;
  for (int t = 0; t < draws; ++t) {
    ComplexGrid n(K, M);
    for (std::size_t i = 0; i < K * M; ++i) n.data()[i] = gen.gaussian() * std::sqrt(sigma2[i]);
    const ComplexGrid out = despread(n);
    for (std::size_t i = 0; i < K * M; ++i) power[i] += std::norm(out.data()[i]);
  }
  const double expected = total / static_cast<double>(M * M);
  for (double& p : power) p /= draws;
  CHECK(oracle::max_abs_diff(ComplexVec(power.begin(), power.end()), ComplexVec(K * M, expected)) <
        0.05 * expected);
  CHECK(relative_spread(power) < 0.05);
}

TEST_CASE("modulate reduces to OFDM for one subsymbol") {
  const FrameParams f{4, 1, 0};
  const auto cfg = modem(f, tx_window(make_rc_pulse(f, 0.0), f, Domain::time));
  ComplexGrid d(4, 1);
  d(0, 0) = 1.0;
  const ComplexVec x = modulate(d, cfg);
  for (const cplx& v : x) CHECK(std::abs(v - x[0]) < 1e-15);
  CHECK(std::abs(x[0]) > 0.1);

  // Any data column: x is a scaled inverse DFT up to a fixed per-subcarrier phase.
  oracle::Gen gen(25);
  const FrameParams g{16, 1, 0};
  const auto cfg16 = modem(g, tx_window(make_rc_pulse(g, 0.0), g, Domain::time));
  const ComplexGrid data = gen.grid(16, 1);
  const ComplexVec y = modulate(data, cfg16);
  const ComplexVec expected = oracle::idft(oracle::colmajor(data));
  const cplx scale = y[3] / expected[3];
  for (std::size_t n = 0; n < 16; ++n) CHECK(std::abs(y[n] - scale * expected[n]) < 1e-12);
  CHECK(std::abs(std::abs(scale) - 4.0) < 1e-12);
}

TEST_CASE("modulate and demodulate match the dense matrices") {
  oracle::Gen gen(26);
  const FrameParams f{4, 3, 0};
  const PrototypePulse g = make_rc_pulse(f, 0.5);
  const PrototypePulse gamma = PrototypePulse::from_time(gen.vec(12), true);
  const oracle::Dense a = oracle::gfdm_matrix(g.time, 4, 3);
  const oracle::Dense b = oracle::gfdm_matrix(gamma.time, 4, 3);
  CHECK(oracle::max_abs_diff(to_dense(build_matrix_A(g, f)), a) < 1e-12);
  CHECK(oracle::max_abs_diff(to_dense(build_matrix_B(gamma, f)), b) < 1e-12);
  CHECK(oracle::max_abs_diff(to_dense(build_matrix_B(g, f)), to_dense(build_matrix_A(g, f))) == 0.0);
  CHECK(oracle::all_zero(build_matrix_B(PrototypePulse::from_time(ComplexVec(12)), f)));
  CHECK(oracle::max_abs_diff(oracle::gfdm_matrix_factored(g.time, 4, 3), a) < 1e-10);

  const ComplexGrid d = gen.grid(4, 3);
  const ComplexVec y = gen.vec(12);
  for (Domain dom : {Domain::time, Domain::frequency}) {
    const auto cfg = modem(f, tx_window(g, f, dom));
    CHECK(oracle::max_abs_diff(modulate(d, cfg), oracle::apply(a, oracle::colmajor(d))) < 1e-10);
    const ComplexGrid dh = demodulate(y, rx_window_from_pulse(gamma, f, dom), cfg);
    CHECK(oracle::max_abs_diff(oracle::colmajor(dh), oracle::apply(oracle::herm(b), y)) < 1e-10);
    CHECK(oracle::all_zero(demodulate(ComplexVec(12), rx_window_from_pulse(gamma, f, dom), cfg)));
  }
}

TEST_CASE("property: dual paths agree and ZF reconstructs on random shapes") {
  oracle::Gen gen(27);
  for (int t = 0; t < 60; ++t) {
    const FrameParams f{gen.size(1, 12), gen.size(1, 12), 0};
    const PrototypePulse g =
        t % 2 ? PrototypePulse::from_time(gen.vec(f.block_len()), true) : make_rc_pulse(f, gen.real(0.0, 1.0));
    const auto td = modem(f, tx_window(g, f, Domain::time));
    const auto fd = modem(f, tx_window(g, f, Domain::frequency));
    const ComplexGrid d = gen.grid(f.subcarriers, f.subsymbols);
    const ComplexVec x = modulate(d, td);
    CHECK(oracle::max_abs_diff(x, modulate(d, fd)) < 1e-9);
    for (const auto* cfg : {&td, &fd}) {
      try {
        const Window rx = rx_window(cfg->window, ReceiverKind::zf);
        CHECK(max_abs_diff(demodulate(x, rx, *cfg), d) < 1e-9);
      } catch (const SingularWindowError& e) {
        CHECK(std::abs(cfg->window.w(e.row(), e.col())) <= kZfSingularityThreshold);
      }
    }
  }
}

TEST_CASE("spreading can be switched off symmetrically") {
  oracle::Gen gen(28);
  const FrameParams f{8, 5, 0};
  const auto cfg = modem(f, tx_window(make_rc_pulse(f, 0.0), f, Domain::frequency), false);
  const ComplexGrid d = gen.grid(8, 5);
  const ComplexVec x = modulate(d, cfg);
  CHECK(max_abs_diff(demodulate(x, rx_window(cfg.window, ReceiverKind::zf), cfg), d) < 1e-10);
  // Without spreading each data entry is windowed directly.
  const auto spread_cfg = modem(f, cfg.window, true);
  CHECK(oracle::max_abs_diff(x, modulate(despread(d), spread_cfg)) < 1e-10);
}

TEST_CASE("receive windows") {
  const Window constant{ComplexGrid(3, 2, ComplexVec(6, 2.5)), Domain::time};
  const Window zf = rx_window(constant, ReceiverKind::zf);
  for (const cplx& v : zf.w.data()) CHECK(std::abs(v - 0.4) < 1e-15);
  const Window mf = rx_window(constant, ReceiverKind::mf);
  for (const cplx& v : mf.w.data()) CHECK(v == cplx{2.5, 0});

  oracle::Gen gen(29);
  const Window w{gen.grid(4, 3), Domain::time};
  const Window mmse0 = rx_window(w, ReceiverKind::mmse, 0.0);
  CHECK(max_abs_diff(mmse0.w, rx_window(w, ReceiverKind::zf).w) < 1e-12);
  CHECK_THROWS_AS(rx_window(w, ReceiverKind::mmse, -1.0), ParameterError);

  Window bad = w;
  bad.w(2, 1) = 1e-7;
  try {
    rx_window(bad, ReceiverKind::zf);
    FAIL("expected a singular window");
  } catch (const SingularWindowError& e) {
    CHECK(e.row() == 2);
    CHECK(e.col() == 1);
    CHECK(std::string(e.code()) == "singular_window");
  }
  CHECK_NOTHROW(rx_window(bad, ReceiverKind::mmse, 0.1));
}

TEST_CASE("MMSE window equals the dense regularised receiver") {
  oracle::Gen gen(30);
  const FrameParams f{4, 3, 0};
  const PrototypePulse g = make_rc_pulse(f, 0.5);
  const oracle::Dense a = oracle::gfdm_matrix(g.time, 4, 3);
  const ComplexVec y = gen.vec(12);
  for (double r : {0.01, 0.1, 1.0}) {
    const ComplexVec expected = oracle::apply(oracle::mmse_matrix(a, r), y);
    for (Domain dom : {Domain::time, Domain::frequency}) {
      const Window tx = tx_window(g, f, dom);
      const ComplexGrid dh = demodulate(y, rx_window(tx, ReceiverKind::mmse, r), modem(f, tx));
      CHECK(oracle::max_abs_diff(oracle::colmajor(dh), expected) < 1e-8);
    }
  }
}

TEST_CASE("MF window is K times the adjoint receiver") {
  oracle::Gen gen(31);
  const FrameParams f{4, 3, 0};
  const PrototypePulse g = PrototypePulse::from_time(gen.vec(12), true);
  const oracle::Dense a = oracle::gfdm_matrix(g.time, 4, 3);
  const ComplexVec y = gen.vec(12);
  const Window tx = tx_window(g, f, Domain::time);
  const ComplexGrid dh = demodulate(y, rx_window(tx, ReceiverKind::mf), modem(f, tx));
  ComplexVec expected = oracle::apply(oracle::herm(a), y);
  for (auto& v : expected) v *= 4.0;
  CHECK(oracle::max_abs_diff(oracle::colmajor(dh), expected) < 1e-10);
}

TEST_CASE("modulator configuration errors") {
  const FrameParams f{4, 3, 0};
  const Window td = tx_window(make_rc_pulse(f, 0.0), f, Domain::time);
  ModulatorConfig cfg = modem(f, td);
  cfg.transform_domain = Domain::frequency;
  CHECK_THROWS_AS(modulate(ComplexGrid(4, 3), cfg), ConfigError);
  cfg = modem(f, tx_window(make_rc_pulse(f, 0.0), f, Domain::frequency));
  cfg.allocation = Allocation::otfs;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = modem(f, td);
  CHECK_THROWS(modulate(ComplexGrid(3, 4), cfg));
  CHECK_THROWS_AS(demodulate(ComplexVec(11), td, cfg), ShapeError);
  const Window fd = tx_window(make_rc_pulse(f, 0.0), f, Domain::frequency);
  CHECK_THROWS_AS(demodulate(ComplexVec(12), fd, cfg), ConfigError);
}
