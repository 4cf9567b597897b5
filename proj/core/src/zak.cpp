// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfdmkit Authors

#include "gfdmkit/zak.hpp"

#include "gfdmkit/errors.hpp"

namespace gfdmkit {

const char* to_string(Domain d) noexcept { return d == Domain::time ? "time" : "frequency"; }

ZakGrid dzt(ConstSamples a, std::size_t P, std::size_t Q) {
  return {dft_columns(reshape_v(a, P, Q)), Domain::time};
}

ComplexVec idzt(const ZakGrid& z) {
  if (z.domain != Domain::time) throw DomainError("idzt: expected a time-domain Zak grid");
  return vec_t(dft_columns(z.grid, /*inverse=*/true));
}

ZakGrid dzt_freq(ConstSamples a_tilde, std::size_t Q, std::size_t P) {
  return {dft_columns(reshape_v(a_tilde, Q, P), /*inverse=*/true), Domain::frequency};
}

ComplexVec idzt_freq(const ZakGrid& z) {
  if (z.domain != Domain::frequency) throw DomainError("idzt_freq: expected a frequency-domain Zak grid");
  return vec_t(dft_columns(z.grid));
}

}  // namespace gfdmkit
