// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfdmkit Authors

#include <benchmark/benchmark.h>

#include <random>

#include "gfdmkit/channel.hpp"
#include "gfdmkit/gfdm.hpp"
#include "gfdmkit/otfs.hpp"

using namespace gfdmkit;

namespace {

ComplexVec noise(std::size_t n, std::uint64_t seed) {
  return awgn(ComplexVec(n), {1.0, seed});
}

void BM_Dft(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ComplexVec x = noise(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(dft(x));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
// powers of two, the direct path, and Bluestein lengths
BENCHMARK(BM_Dft)->Arg(16)->Arg(48)->Arg(128)->Arg(2048)->Arg(2176)->Arg(4095);

void BM_Modulate(benchmark::State& state) {
  const FrameParams f{static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)), 0};
  const Domain dom = state.range(2) ? Domain::frequency : Domain::time;
  ModulatorConfig cfg;
  cfg.params = f;
  cfg.window = tx_window(make_rc_pulse(f, 0.5), f, dom);
  cfg.transform_domain = dom;
  const ComplexGrid d(f.subcarriers, f.subsymbols, noise(f.block_len(), 2));
  for (auto _ : state) benchmark::DoNotOptimize(modulate(d, cfg));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.block_len()));
}
BENCHMARK(BM_Modulate)->Args({16, 8, 0})->Args({16, 8, 1})->Args({16, 128, 0})->Args({16, 128, 1})->Args({2048, 1, 0});

void BM_Demodulate(benchmark::State& state) {
  const FrameParams f{static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)), 0};
  ModulatorConfig cfg;
  cfg.params = f;
  cfg.window = tx_window(make_rc_pulse(f, 0.0), f, Domain::time);
  const Window rx = rx_window(cfg.window, ReceiverKind::mmse, 0.1);
  const ComplexVec y = noise(f.block_len(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(demodulate(y, rx, cfg));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.block_len()));
}
BENCHMARK(BM_Demodulate)->Args({16, 8})->Args({16, 128});

void BM_OtfsReceive(benchmark::State& state) {
  const OtfsParams p{128, 16, 32};
  const FrameParams f = p.as_gfdm();
  const Window tx = tx_window(make_rc_pulse(f, 0.0), f, Domain::time);
  const DelayDopplerChannel ch({{0, 1.0, 0.0}, {5, cplx{0.5, 0.2}, 0.0}, {12, cplx{0.0, 0.3}, 0.0}});
  const ComplexGrid h = equivalent_channel_otfs(ch, p).grid;
  const ComplexVec r = noise(p.burst_len_with_cp(), 4);
  for (auto _ : state) benchmark::DoNotOptimize(otfs_receive(r, tx, h, ReceiverKind::mmse, 0.05, p));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.burst_len()));
}
BENCHMARK(BM_OtfsReceive);

void BM_ApplyLtv(benchmark::State& state) {
  const DelayDopplerChannel ch({{0, 1.0, 1e-4}, {5, cplx{0.5, 0.2}, -7e-5}, {12, cplx{0.0, 0.3}, 3e-5}});
  const ComplexVec x = noise(2560, 5);
  for (auto _ : state) benchmark::DoNotOptimize(apply_ltv(x, ch, 1000));
  state.SetItemsProcessed(state.iterations() * 2560);
}
BENCHMARK(BM_ApplyLtv);

}  // namespace

BENCHMARK_MAIN();
