/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace hda {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid or inconsistent configuration (CLI exit code 2).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// Numerical failure: blow-up, non-convergence, singular covariance
/// (CLI exit code 3).
class NumericsError : public Error {
 public:
  explicit NumericsError(const std::string& msg) : Error(msg) {}
};

/// File format or filesystem failure (CLI exit code 4).
class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

/// Shape or index mismatch between operands.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& msg) : Error(msg) {}
};

}  // namespace hda
