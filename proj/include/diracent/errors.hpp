// Copyright 2026 The diracent Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace diracent {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class NotHermitianError : public Error {
 public:
  using Error::Error;
};

/// Physical precondition violated (off-shell momentum, non-unit direction, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A superposition or projection collapsed to the zero vector.
class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

/// Input is outside the class of states an operation supports.
class UnsupportedStateError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration value; names the offending field.
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Failure inside the sweep pipeline at a specific grid point.
class PipelineError : public Error {
 public:
  PipelineError(double omega, double theta, const std::string& message)
      : Error("at (omega=" + std::to_string(omega) + ", theta=" + std::to_string(theta) +
              "): " + message),
        omega_(omega),
        theta_(theta) {}
  double omega() const noexcept { return omega_; }
  double theta() const noexcept { return theta_; }

 private:
  double omega_;
  double theta_;
};

}  // namespace diracent
