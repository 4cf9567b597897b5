// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfdmkit Authors

#include "fft.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <numbers>

namespace gfdmkit::detail {

namespace {

constexpr std::size_t kDirectThreshold = 64;

cplx unit_root(std::size_t num, std::size_t den) {
  // e^{-j 2 pi num / den}, with num reduced first so the angle stays small.
  const double angle = -2.0 * std::numbers::pi * static_cast<double>(num % den) /
                       static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

FftPlan::FftPlan(std::size_t n) : n_(n) {
  if (n <= 1) {
    kind_ = Kind::trivial;
    return;
  }
  if (std::has_single_bit(n)) {
    kind_ = Kind::radix2;
    twiddle_.resize(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) twiddle_[k] = unit_root(k, n);
    const int bits = std::countr_zero(n);
    bitrev_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = 0;
      for (int b = 0; b < bits; ++b) r |= ((i >> b) & 1U) << (bits - 1 - b);
      bitrev_[i] = r;
    }
    return;
  }
  if (n < kDirectThreshold) {
    kind_ = Kind::direct;
    twiddle_.resize(n);
    for (std::size_t k = 0; k < n; ++k) twiddle_[k] = unit_root(k, n);
    return;
  }

  kind_ = Kind::bluestein;
  const std::size_t m = std::bit_ceil(2 * n - 1);
  inner_ = get(m);
  chirp_.resize(n);
  // k^2 mod 2n keeps the chirp phase exact for large k.
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t k2 = (k * k) % (2 * n);
    const double angle = -std::numbers::pi * static_cast<double>(k2) / static_cast<double>(n);
    chirp_[k] = {std::cos(angle), std::sin(angle)};
  }
  chirp_spectrum_.assign(m, cplx{});
  chirp_spectrum_[0] = std::conj(chirp_[0]);
  for (std::size_t k = 1; k < n; ++k) {
    chirp_spectrum_[k] = std::conj(chirp_[k]);
    chirp_spectrum_[m - k] = std::conj(chirp_[k]);
  }
  inner_->forward(chirp_spectrum_);
}

void FftPlan::forward(std::span<cplx> data) const {
  switch (kind_) {
    case Kind::trivial:
      return;
    case Kind::radix2:
      radix2(data);
      return;
    case Kind::direct:
      direct(data);
      return;
    case Kind::bluestein:
      bluestein(data);
      return;
  }
}

void FftPlan::inverse(std::span<cplx> data) const {
  for (auto& v : data) v = std::conj(v);
  forward(data);
  const double scale = 1.0 / static_cast<double>(n_);
  for (auto& v : data) v = std::conj(v) * scale;
}

void FftPlan::radix2(std::span<cplx> data) const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (i < bitrev_[i]) std::swap(data[i], data[bitrev_[i]]);
  }
  for (std::size_t len = 2; len <= n_; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t step = n_ / len;
    for (std::size_t start = 0; start < n_; start += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const cplx t = data[start + j + half] * twiddle_[j * step];
        const cplx u = data[start + j];
        data[start + j] = u + t;
        data[start + j + half] = u - t;
      }
    }
  }
}

void FftPlan::direct(std::span<cplx> data) const {
  std::vector<cplx> out(n_);
  for (std::size_t k = 0; k < n_; ++k) {
    cplx acc{};
    std::size_t idx = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      acc += data[j] * twiddle_[idx];
      idx += k;
      if (idx >= n_) idx -= n_;
    }
    out[k] = acc;
  }
  std::copy(out.begin(), out.end(), data.begin());
}

void FftPlan::bluestein(std::span<cplx> data) const {
  const std::size_t m = inner_->size();
  std::vector<cplx> work(m, cplx{});
  for (std::size_t k = 0; k < n_; ++k) work[k] = data[k] * chirp_[k];
  inner_->forward(work);
  for (std::size_t k = 0; k < m; ++k) work[k] *= chirp_spectrum_[k];
  inner_->inverse(work);
  for (std::size_t k = 0; k < n_; ++k) data[k] = work[k] * chirp_[k];
}

std::shared_ptr<const FftPlan> FftPlan::get(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const FftPlan>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // Built outside the lock: Bluestein plans recurse into get().
  auto plan = std::make_shared<const FftPlan>(n);
  std::lock_guard lock(mutex);
  return cache.try_emplace(n, std::move(plan)).first->second;
}

}  // namespace gfdmkit::detail
