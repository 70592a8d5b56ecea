// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace interp {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Grids or dimensions that do not line up.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A numeric argument outside its admissible range (e.g. lambda*omega >= 1).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A mathematical hypothesis of the requested check is not met.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class SolverError : public Error {
 public:
  SolverError(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace interp
