// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "interp/energy.hpp"
#include "interp/normed_space.hpp"

namespace interp {

enum class DomainStatus { InDomain, InClosure, Outside };

// m-accretive operator of type omega, described through its resolvent.
class AccretiveOperator {
 public:
  virtual ~AccretiveOperator() = default;

  virtual const NormedSpace& space() const = 0;
  virtual double omega() const = 0;
  virtual std::string id() const = 0;

  // J_lambda x = (I + lambda A)^{-1} x. Throws ParameterError if lambda*omega >= 1.
  Vector resolve(double lambda, const Vector& x, const Vector* warm = nullptr) const;
  // A_lambda x = (x - J_lambda x)/lambda.
  Vector yosida(double lambda, const Vector& x) const;

  // |Ax| = inf ||f|| over f in Ax; inf off the domain.
  virtual double set_norm(const Vector& x) const = 0;
  virtual DomainStatus domain_status(const Vector&) const { return DomainStatus::InDomain; }
  virtual bool single_valued() const { return true; }
  // An element of Ax (the minimal one for subgradients); nullopt off the domain.
  virtual std::optional<Vector> section(const Vector& x) const = 0;
  virtual const Energy* energy() const { return nullptr; }
  // Relative accuracy of resolve(): ||computed - J_l x|| <= l * tol * (1 + ||x||).
  // Zero for direct solves.
  virtual double resolve_tolerance() const { return 0.0; }
  // Exact S(t)x when the operator admits one (symmetric linear instances).
  virtual std::optional<Vector> exact_semigroup(double, const Vector&) const {
    return std::nullopt;
  }

  void check_lambda(double lambda) const;

 protected:
  virtual Vector do_resolve(double lambda, const Vector& x, const Vector* warm) const = 0;
};

using OperatorPtr = std::shared_ptr<const AccretiveOperator>;

// sup of ||A_lambda x|| as lambda decreases; inf for points outside the domain closure.
double set_norm_by_yosida(const AccretiveOperator& op, const Vector& x);

// Linear operator x -> M x; the caller states the type omega.
OperatorPtr matrix_operator(Matrix M, NormedSpace space, double omega, std::string id = "matrix");
// 1-D x -> a x on Euclidean R; type max(0, -a).
OperatorPtr scalar_operator(double a);
OperatorPtr subgradient_operator(EnergyPtr energy);
OperatorPtr qlaplace_operator(int n_interior, double q);
// alpha I + beta A with beta > 0; type max(0, beta*omega_A - alpha).
OperatorPtr affine_operator(OperatorPtr A, double alpha, double beta);
// I + h A.
OperatorPtr shifted_operator(OperatorPtr A, double h);
// A - w I, accretive of type omega_A + w.
OperatorPtr omega_shift(OperatorPtr A, double w);

struct Perturbation {
  std::function<Vector(const Vector&)> map;
  double lipschitz = 0.0;  // global Lipschitz constant of B
  std::string id = "B";
};

// A + B with B single-valued and globally Lipschitz. The resolvent is the
// fixed point of v -> J^A_lambda(x - lambda B v). `omega` defaults to
// omega_A + lipschitz.
OperatorPtr perturbed_operator(OperatorPtr A, Perturbation B,
                               std::optional<double> omega = std::nullopt);
Perturbation sine_perturbation(double c);  // v -> c sin(v) componentwise
Perturbation zero_perturbation();

struct KatoBracket {
  double value = 0.0;
  std::vector<double> quotients;
  bool monotone = true;  // quotients nonincreasing up to rounding
};

// [x, y] = lim (||x + l y|| - ||x||)/l along l_k = 2^-k, k = 4..40.
KatoBracket kato_bracket(const NormedSpace& space, const Vector& x, const Vector& y);

}  // namespace interp

namespace interp {

// J_{lambda_i} x for increasing lambdas, warm-starting each solve from the
// previous one. Entries with lambda*omega >= 1 are left empty (size 0).
std::vector<Vector> resolvent_curve(const AccretiveOperator& op, const Vector& x,
                                    const std::vector<double>& lambdas);

}  // namespace interp
