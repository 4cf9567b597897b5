// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfdmkit Authors

#pragma once

#include <cstddef>

#include "gfdmkit/numerics.hpp"

namespace gfdmkit {

/// Which representation a grid or window lives in.
enum class Domain { time, frequency };

const char* to_string(Domain d) noexcept;

/// Discrete Zak transform of a length P*Q sequence, stored dense.
///
/// A time-domain grid is F_P V_{P,Q}(a) (shape P x Q). A frequency-domain
/// grid is (1/Q) F_Q^H V_{Q,P}(a~) of the sequence's N-point spectrum a~
/// (shape Q x P). The tag makes mixing the two a checked error.
struct ZakGrid {
  ComplexGrid grid;
  Domain domain = Domain::time;
};

/// Time-domain DZT: F_P applied down each column of reshape_v(a, P, Q).
ZakGrid dzt(ConstSamples a, std::size_t P, std::size_t Q);

/// Inverse of dzt; throws DomainError for a frequency-domain grid.
ComplexVec idzt(const ZakGrid& z);

/// Frequency-domain DZT of a spectrum a~ (the N-point DFT of some signal):
/// (1/Q) F_Q^H applied down each column of reshape_v(a~, Q, P).
ZakGrid dzt_freq(ConstSamples a_tilde, std::size_t Q, std::size_t P);

/// Inverse of dzt_freq, returning the spectrum a~.
ComplexVec idzt_freq(const ZakGrid& z);

}  // namespace gfdmkit
