// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <string>

#include "interp/normed_space.hpp"

namespace interp {

struct ProxResult {
  Vector v;
  double residual = 0.0;  // H-norm of the Moreau-objective gradient (0 for closed forms)
  int iterations = 0;
};

struct ProxOptions {
  double tolerance = 1e-10;  // relative to 1 + ||x||
  int max_iterations = 200;
};

// Proper convex lower semicontinuous function on a Hilbert NormedSpace.
// Gradients are taken with respect to the space's inner product.
class Energy {
 public:
  virtual ~Energy() = default;
  virtual const NormedSpace& space() const = 0;
  virtual std::string id() const = 0;
  virtual double value(const Vector& v) const = 0;  // inf off the effective domain
  // Minimal-norm subgradient; nullopt where the subdifferential is empty.
  virtual std::optional<Vector> min_subgradient(const Vector& v) const = 0;
  virtual bool smooth() const { return true; }
  virtual bool in_closure_of_domain(const Vector&) const { return true; }

  // argmin_v E(v) + ||v - x||^2 / (2 lambda)
  virtual ProxResult prox(double lambda, const Vector& x, const Vector* warm = nullptr,
                          const ProxOptions& opt = {}) const;

 protected:
  // Needed by the default damped Newton prox.
  virtual Vector gradient(const Vector& v) const;
  // Solves (Hess E(v) + shift I) d = rhs in the H-geometry.
  virtual Vector solve_shifted_hessian(const Vector& v, double shift, const Vector& rhs) const;
};

using EnergyPtr = std::shared_ptr<const Energy>;

// E(v) = 1/2 v^T Q v with Q symmetric positive semidefinite (Euclidean
// coordinates; the H-gradient is W^{-1} Q v for weights W).
EnergyPtr quadratic_energy(Matrix Q, NormedSpace space);
// E(v) = c * sum |v_i| on Euclidean space.
EnergyPtr abs_energy(Eigen::Index dim, double c = 1.0);
// Indicator of the box [lo, hi]; its subdifferential has a non-dense domain.
EnergyPtr box_indicator(Vector lo, Vector hi, NormedSpace space);
// Discrete Dirichlet q-energy (1/q) sum_e h |(u_{e+1}-u_e)/h|^q, h = 1/(n+1),
// zero padding at both ends, discrete L2 inner product with weight h.
EnergyPtr qlaplace_energy(int n_interior, double q);

// Helpers for the q-energy.
double qlaplace_h(int n_interior);
NormedSpace qlaplace_space(int n_interior);

}  // namespace interp
