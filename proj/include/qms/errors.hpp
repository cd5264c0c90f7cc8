// Copyright 2026 The qms Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qms {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes do not agree (non-square input, mixed Kraus dimensions, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input data violates a structural requirement (negative stochastic entry,
/// non-unit trace, NaN, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure failed: non-convergence, overflow, residual
/// exceeded. Carries the offending residual or condition estimate.
class NumericError : public Error {
 public:
  NumericError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// The eigenvalue-1 group could not be separated from the rest of the
/// spectrum.
class SpectralResolutionError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Jordan structure could not be decided (rank decision near threshold).
class IllConditionedStructureError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// The input lies outside the domain of a formula or recipe.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A caller-side precondition does not hold (e.g. a supplied state is not
/// stationary).
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// A theorem hypothesis is not met (e.g. non-unique stationary state).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Malformed external input (channel file, CLI flag).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qms
