// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfdmkit Authors

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gfdmkit {

/// Base of every error thrown by the library. `code()` is a short stable
/// token suitable for machine-readable diagnostics ("shape", "io", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what) : Error("shape", what) {}
};

/// Operand carried the wrong time/frequency tag.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("domain", what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error("config", what) {}
};

class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& what) : Error("parameter", what) {}
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error("input", what) {}
};

class StatisticsError : public Error {
 public:
  explicit StatisticsError(const std::string& what) : Error("statistics", what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("io", what) {}
};

/// Zero-forcing synthesis hit a window entry at or below the singularity
/// threshold. Row/column locate the first offending entry.
class SingularWindowError : public Error {
 public:
  SingularWindowError(std::size_t row, std::size_t col, double magnitude)
      : Error("singular_window",
              "window entry (" + std::to_string(row) + "," + std::to_string(col) +
                  ") has magnitude " + std::to_string(magnitude) +
                  ", zero-forcing is undefined"),
        row_(row),
        col_(col) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

}  // namespace gfdmkit
