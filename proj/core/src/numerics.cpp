// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfdmkit Authors

#include "gfdmkit/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "gfdmkit/errors.hpp"

namespace gfdmkit {

namespace {

std::string dims(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

void require_factorization(std::size_t len, std::size_t P, std::size_t Q, const char* op) {
  if (P == 0 || Q == 0 || len != P * Q) {
    throw ShapeError(std::string(op) + ": length " + std::to_string(len) +
                     " does not factor as " + dims(P, Q));
  }
}

}  // namespace

ComplexGrid::ComplexGrid(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw ShapeError("grid dimensions must be positive, got " + dims(rows, cols));
}

ComplexGrid::ComplexGrid(std::size_t rows, std::size_t cols, ComplexVec data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows == 0 || cols == 0) throw ShapeError("grid dimensions must be positive, got " + dims(rows, cols));
  if (data_.size() != rows * cols) {
    throw ShapeError("grid " + dims(rows, cols) + " cannot hold " + std::to_string(data_.size()) +
                     " samples");
  }
}

ComplexGrid ComplexGrid::transposed() const {
  ComplexGrid t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ComplexGrid ComplexGrid::conj() const {
  ComplexGrid out = *this;
  for (auto& v : out.data_) v = std::conj(v);
  return out;
}

ComplexGrid ComplexGrid::scaled(cplx factor) const {
  ComplexGrid out = *this;
  for (auto& v : out.data_) v *= factor;
  return out;
}

ComplexGrid hadamard(const ComplexGrid& a, const ComplexGrid& b) {
  if (!a.same_shape(b)) {
    throw ShapeError("hadamard: " + dims(a.rows(), a.cols()) + " vs " + dims(b.rows(), b.cols()));
  }
  ComplexGrid out(a.rows(), a.cols());
  auto o = out.data();
  auto x = a.data();
  auto y = b.data();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = x[i] * y[i];
  return out;
}

ComplexGrid matmul(const ComplexGrid& a, const ComplexGrid& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: " + dims(a.rows(), a.cols()) + " times " + dims(b.rows(), b.cols()));
  }
  ComplexGrid out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

ComplexVec matvec(const ComplexGrid& a, ConstSamples x) {
  if (a.cols() != x.size()) {
    throw ShapeError("matvec: " + dims(a.rows(), a.cols()) + " times length " + std::to_string(x.size()));
  }
  ComplexVec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx acc{};
    for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * x[k];
    out[i] = acc;
  }
  return out;
}

ComplexGrid adjoint(const ComplexGrid& a) { return a.transposed().conj(); }

double squared_norm(ConstSamples v) {
  double acc = 0.0;
  for (const auto& s : v) acc += std::norm(s);
  return acc;
}

double max_abs_diff(ConstSamples a, ConstSamples b) {
  if (a.size() != b.size()) throw ShapeError("max_abs_diff: length mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_abs_diff(const ComplexGrid& a, const ComplexGrid& b) {
  if (!a.same_shape(b)) throw ShapeError("max_abs_diff: shape mismatch");
  return max_abs_diff(a.data(), b.data());
}

// ---------------------------------------------------------------------------

ComplexVec dft(ConstSamples v) {
  if (v.empty()) throw ShapeError("dft: zero-length input");
  ComplexVec out(v.begin(), v.end());
  detail::FftPlan::get(out.size())->forward(out);
  return out;
}

ComplexVec idft(ConstSamples v) {
  if (v.empty()) throw ShapeError("idft: zero-length input");
  ComplexVec out(v.begin(), v.end());
  detail::FftPlan::get(out.size())->inverse(out);
  return out;
}

ComplexGrid dft_columns(const ComplexGrid& g, bool inverse) {
  const auto plan = detail::FftPlan::get(g.rows());
  ComplexGrid out = g;
  ComplexVec column(g.rows());
  for (std::size_t c = 0; c < g.cols(); ++c) {
    for (std::size_t r = 0; r < g.rows(); ++r) column[r] = g(r, c);
    inverse ? plan->inverse(column) : plan->forward(column);
    for (std::size_t r = 0; r < g.rows(); ++r) out(r, c) = column[r];
  }
  return out;
}

ComplexGrid dft_rows(const ComplexGrid& g, bool inverse) {
  const auto plan = detail::FftPlan::get(g.cols());
  ComplexGrid out = g;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    auto row = out.row(r);
    inverse ? plan->inverse(row) : plan->forward(row);
  }
  return out;
}

ComplexVec kron_dft_apply(ConstSamples a, std::size_t P, std::size_t Q, bool inverse) {
  require_factorization(a.size(), P, Q, "kron_dft_apply");
  const auto plan = detail::FftPlan::get(Q);
  ComplexVec out(a.begin(), a.end());
  for (std::size_t p = 0; p < P; ++p) {
    std::span<cplx> segment(out.data() + p * Q, Q);
    inverse ? plan->inverse(segment) : plan->forward(segment);
  }
  return out;
}

ComplexGrid dft_matrix(std::size_t P) {
  ComplexGrid f(P, P);
  for (std::size_t i = 0; i < P; ++i)
    for (std::size_t j = 0; j < P; ++j) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>((i * j) % P) /
                           static_cast<double>(P);
      f(i, j) = {std::cos(angle), std::sin(angle)};
    }
  return f;
}

// ---------------------------------------------------------------------------

ComplexGrid reshape_v(ConstSamples a, std::size_t P, std::size_t Q) {
  require_factorization(a.size(), P, Q, "reshape_v");
  return ComplexGrid(P, Q, ComplexVec(a.begin(), a.end()));
}

ComplexVec vec_t(const ComplexGrid& g) { return ComplexVec(g.data().begin(), g.data().end()); }

ComplexVec vec(const ComplexGrid& g) {
  ComplexVec out(g.size());
  for (std::size_t c = 0; c < g.cols(); ++c)
    for (std::size_t r = 0; r < g.rows(); ++r) out[r + c * g.rows()] = g(r, c);
  return out;
}

ComplexGrid unvec(ConstSamples a, std::size_t rows, std::size_t cols) {
  require_factorization(a.size(), rows, cols, "unvec");
  ComplexGrid g(rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) g(r, c) = a[r + c * rows];
  return g;
}

ComplexVec commutation_apply(ConstSamples a, std::size_t P, std::size_t Q) {
  require_factorization(a.size(), P, Q, "commutation_apply");
  // X is Q x P with X[i, j] = a[i + jQ]; vec(X^T)[j + iP] = X[i, j].
  ComplexVec out(a.size());
  for (std::size_t i = 0; i < Q; ++i)
    for (std::size_t j = 0; j < P; ++j) out[j + i * P] = a[i + j * Q];
  return out;
}

ComplexGrid commutation_matrix(std::size_t P, std::size_t Q) {
  if (P == 0 || Q == 0) throw ShapeError("commutation_matrix: dimensions must be positive");
  const std::size_t n = P * Q;
  ComplexGrid pi(n, n);
  for (std::size_t i = 0; i < Q; ++i)
    for (std::size_t j = 0; j < P; ++j) pi(j + i * P, i + j * Q) = 1.0;
  return pi;
}

}  // namespace gfdmkit
