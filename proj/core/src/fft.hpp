// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfdmkit Authors

#pragma once

#include <memory>
#include <span>
#include <vector>

#include "gfdmkit/numerics.hpp"

namespace gfdmkit::detail {

/// Precomputed transform of one length. Powers of two use an iterative
/// radix-2 kernel, short odd lengths a direct table-driven sum, everything
/// else Bluestein's chirp-z over a power-of-two inner plan.
class FftPlan {
 public:
  explicit FftPlan(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  /// Unnormalized forward DFT, in place.
  void forward(std::span<cplx> data) const;
  /// (1/n) F^H, in place.
  void inverse(std::span<cplx> data) const;

  /// Shared, immutable plan for length n. Thread-safe.
  static std::shared_ptr<const FftPlan> get(std::size_t n);

 private:
  enum class Kind { trivial, radix2, direct, bluestein };

  void radix2(std::span<cplx> data) const;
  void direct(std::span<cplx> data) const;
  void bluestein(std::span<cplx> data) const;

  std::size_t n_;
  Kind kind_;
  std::vector<cplx> twiddle_;        // radix2: n/2 roots; direct: n roots
  std::vector<std::size_t> bitrev_;  // radix2 only
  std::vector<cplx> chirp_;          // bluestein: e^{-j pi k^2 / n}
  std::vector<cplx> chirp_spectrum_;
  std::shared_ptr<const FftPlan> inner_;
};

}  // namespace gfdmkit::detail
