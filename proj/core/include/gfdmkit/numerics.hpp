// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfdmkit Authors

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace gfdmkit {

using cplx = std::complex<double>;
using ComplexVec = std::vector<cplx>;
using ConstSamples = std::span<const cplx>;

/// Dense row-major complex matrix with an explicit shape.
class ComplexGrid {
 public:
  ComplexGrid() = default;
  /// Zero-filled rows x cols grid. Both dimensions must be positive.
  ComplexGrid(std::size_t rows, std::size_t cols);
  /// Adopts `data` as the row-major contents; throws ShapeError unless
  /// data.size() == rows * cols.
  ComplexGrid(std::size_t rows, std::size_t cols, ComplexVec data);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<cplx> data() noexcept { return data_; }
  std::span<const cplx> data() const noexcept { return data_; }
  std::span<cplx> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const cplx> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  ComplexGrid transposed() const;
  ComplexGrid conj() const;
  ComplexGrid scaled(cplx factor) const;

  bool same_shape(const ComplexGrid& other) const noexcept {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  friend bool operator==(const ComplexGrid&, const ComplexGrid&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  ComplexVec data_;
};

/// Elementwise product; shapes must agree.
ComplexGrid hadamard(const ComplexGrid& a, const ComplexGrid& b);

/// Dense matrix product (oracle-sized problems only).
ComplexGrid matmul(const ComplexGrid& a, const ComplexGrid& b);
ComplexVec matvec(const ComplexGrid& a, ConstSamples x);
/// Conjugate transpose.
ComplexGrid adjoint(const ComplexGrid& a);

double squared_norm(ConstSamples v);
double max_abs_diff(ConstSamples a, ConstSamples b);
double max_abs_diff(const ComplexGrid& a, const ComplexGrid& b);

// ---------------------------------------------------------------------------
// Transforms. Forward kernel e^{-j 2 pi i j / P}, unnormalized; the inverse
// carries 1/P. Any length >= 1 is accepted.

ComplexVec dft(ConstSamples v);
ComplexVec idft(ConstSamples v);

/// P-point DFT (or scaled inverse) down every column: F_P * G.
ComplexGrid dft_columns(const ComplexGrid& g, bool inverse = false);
/// Q-point DFT (or scaled inverse) along every row: G * F_Q.
ComplexGrid dft_rows(const ComplexGrid& g, bool inverse = false);

/// Applies (I_P kron F_Q) to `a`: a Q-point DFT on each of the P contiguous
/// segments. With `inverse` the segments get (1/Q) F_Q^H instead.
ComplexVec kron_dft_apply(ConstSamples a, std::size_t P, std::size_t Q, bool inverse);

/// Dense P-point DFT matrix [F]_{i,j} = e^{-j 2 pi i j / P}.
ComplexGrid dft_matrix(std::size_t P);

// ---------------------------------------------------------------------------
// Index maps. All of these are exact permutations; no arithmetic happens.

/// [V]_{p,q} = a[q + pQ]: row-major fill of a P x Q grid.
ComplexGrid reshape_v(ConstSamples a, std::size_t P, std::size_t Q);
/// Inverse of reshape_v, i.e. vec of the transpose (row-major read-out).
ComplexVec vec_t(const ComplexGrid& g);
/// Column-major vectorization vec(G).
ComplexVec vec(const ComplexGrid& g);
/// Inverse of vec: column-major fill of a rows x cols grid.
ComplexGrid unvec(ConstSamples a, std::size_t rows, std::size_t cols);

/// Returns vec(X^T) where a = vec(X) and X is Q x P. Calling again with
/// (Q, P) swapped undoes it.
ComplexVec commutation_apply(ConstSamples a, std::size_t P, std::size_t Q);
/// Dense permutation matrix with the same action as commutation_apply.
ComplexGrid commutation_matrix(std::size_t P, std::size_t Q);

}  // namespace gfdmkit
