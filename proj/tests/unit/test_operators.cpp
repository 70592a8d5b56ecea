// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>

#include "interp/error.hpp"
#include "interp/operators.hpp"

using namespace interp;

namespace {

// Dirichlet Laplacian (1/h^2) tridiag(-1, 2, -1), built independently of the library.
Matrix laplacian(int n) {
  const double h = 1.0 / (n + 1.0);
  Matrix L = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    L(i, i) = 2.0 / (h * h);
    if (i > 0) L(i, i - 1) = -1.0 / (h * h);
    if (i + 1 < n) L(i, i + 1) = -1.0 / (h * h);
  }
  return L;
}

Vector random_vector(std::mt19937_64& rng, Eigen::Index n, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Vector v(n);
  for (auto& e : v) e = u(rng);
  return v;
}

struct Instance {
  std::string name;
  OperatorPtr op;
};

std::vector<Instance> instances() {
  Matrix M(2, 2);
  M << 2.0, -1.0, 0.5, 1.0;  // nonsymmetric, accretive in the Euclidean norm
  return {
      {"scalar", scalar_operator(1.5)},
      {"matrix", matrix_operator(M, NormedSpace::euclidean(2), 0.0)},
      {"abs", subgradient_operator(abs_energy(3))},
      {"qlaplace3", qlaplace_operator(12, 3.0)},
      {"qlaplace2", qlaplace_operator(12, 2.0)},
      {"shifted", omega_shift(scalar_operator(1.0), 0.5)},
      {"perturbed", perturbed_operator(qlaplace_operator(8, 3.0), sine_perturbation(0.5))},
  };
}

}  // namespace

TEST(Scalar, ResolventClosedForm) {
  const auto op = scalar_operator(2.0);
  for (double l : {1e-6, 0.1, 1.0, 10.0}) {
    const Vector x = Vector::Constant(1, 3.0);
    EXPECT_NEAR(op->resolve(l, x)[0], 3.0 / (1.0 + 2.0 * l), 1e-15);
  }
  EXPECT_DOUBLE_EQ(op->set_norm(Vector::Constant(1, -3.0)), 6.0);
}

TEST(Scalar, NegativeCoefficientHasType) {
  const auto op = scalar_operator(-0.5);
  EXPECT_DOUBLE_EQ(op->omega(), 0.5);
  EXPECT_THROW(op->resolve(2.0, Vector::Ones(1)), ParameterError);
  EXPECT_NO_THROW(op->resolve(1.9, Vector::Ones(1)));
}

TEST(Matrix, ExactSemigroupMatchesMatrixExponential) {
  const Matrix L = laplacian(6);
  const auto op = matrix_operator(L, NormedSpace::euclidean(6), 0.0);
  std::mt19937_64 rng(5);
  const Vector x = random_vector(rng, 6);
  for (double t : {1e-4, 1e-2, 0.3}) {
    const Matrix E = (-t * L).exp();
    const auto s = op->exact_semigroup(t, x);
    ASSERT_TRUE(s.has_value());
    EXPECT_LT((*s - E * x).norm(), 1e-12 * (1.0 + x.norm()));
  }
}

TEST(QLaplace, QuadraticCaseMatchesTridiagonalSolve) {
  const int n = 20;
  const auto op = qlaplace_operator(n, 2.0);
  const Matrix L = laplacian(n);
  std::mt19937_64 rng(9);
  for (double l : {1e-5, 1e-3, 0.1}) {
    const Vector x = random_vector(rng, n);
    const Vector ref = (Matrix::Identity(n, n) + l * L).ldlt().solve(x);
    EXPECT_LT((op->resolve(l, x) - ref).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(QLaplace, FirstEigenvectorSetNorm) {
  const int n = 31;
  const double h = 1.0 / (n + 1.0);
  const auto op = qlaplace_operator(n, 2.0);
  Vector u(n);
  for (int i = 0; i < n; ++i) u[i] = std::sin(std::numbers::pi * (i + 1) * h);
  const double lambda1 = 4.0 / (h * h) * std::pow(std::sin(std::numbers::pi * h / 2.0), 2);
  EXPECT_NEAR(op->set_norm(u), lambda1 * op->space().norm(u), 1e-9 * lambda1);
}

TEST(Abs, ProxIsSoftThreshold) {
  const auto E = abs_energy(3, 2.0);
  Vector x(3);
  x << 3.0, -0.5, -5.0;
  const Vector v = E->prox(0.5, x).v;
  EXPECT_DOUBLE_EQ(v[0], 2.0);
  EXPECT_DOUBLE_EQ(v[1], 0.0);
  EXPECT_DOUBLE_EQ(v[2], -4.0);
}

TEST(Box, ProjectionAndDomain) {
  const auto E = box_indicator(Vector::Constant(2, -1.0), Vector::Constant(2, 1.0), NormedSpace::euclidean(2));
  const auto op = subgradient_operator(E);
  Vector x(2);
  x << 2.0, 0.5;
  const Vector v = op->resolve(0.3, x);
  EXPECT_DOUBLE_EQ(v[0], 1.0);
  EXPECT_DOUBLE_EQ(v[1], 0.5);
  EXPECT_EQ(op->domain_status(x), DomainStatus::Outside);
  EXPECT_EQ(op->domain_status(v), DomainStatus::InDomain);
  EXPECT_TRUE(std::isinf(op->set_norm(x)));
}

TEST(Resolvent, LipschitzInLambda) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> lam(1e-3, 0.9);
  for (const auto& [name, op] : instances()) {
    const double w = op->omega();
    for (int trial = 0; trial < 25; ++trial) {
      const Vector x = random_vector(rng, op->space().dim(), 2.0);
      double l = lam(rng), m = lam(rng);
      if (w > 0.0) l = std::min(l, 0.9 / w), m = std::min(m, 0.9 / w);
      const Vector Jl = op->resolve(l, x), Jm = op->resolve(m, x);
      const double lhs = op->space().norm(Jl - Jm);
      const double rhs = std::abs(l - m) / (1.0 - l * w) * op->space().norm(x - Jm) / m;
      EXPECT_LE(lhs, rhs + 1e-8) << name << " l=" << l << " m=" << m;
    }
  }
}

TEST(Resolvent, AccretivityOnGraphPairs) {
  std::mt19937_64 rng(22);
  for (const auto& [name, op] : instances()) {
    const double w = op->omega();
    const double mu = w > 0.0 ? 0.5 / w : 0.2;
    for (int trial = 0; trial < 25; ++trial) {
      const Vector u = random_vector(rng, op->space().dim(), 2.0);
      const Vector uh = random_vector(rng, op->space().dim(), 2.0);
      const Vector x = op->resolve(mu, u), xh = op->resolve(mu, uh);
      const Vector f = (u - x) / mu, fh = (uh - xh) / mu;
      for (double l : {0.01, 0.1, 1.0}) {
        if (l * w >= 1.0) continue;
        const double lhs = op->space().norm(x - xh + l * (f - fh));
        EXPECT_GE(lhs, (1.0 - l * w) * op->space().norm(x - xh) - 1e-8 * (1.0 + lhs)) << name;
      }
    }
  }
}

TEST(Prox, MoreauMinimality) {
  std::mt19937_64 rng(23);
  const std::vector<EnergyPtr> energies = {
      abs_energy(2, 0.7), qlaplace_energy(10, 3.0), qlaplace_energy(10, 4.0),
      quadratic_energy(laplacian(4), NormedSpace::euclidean(4)),
      box_indicator(Vector::Constant(3, -1.0), Vector::Constant(3, 0.5), NormedSpace::euclidean(3))};
  for (const auto& E : energies) {
    const auto& H = E->space();
    for (double t : {1e-3, 0.1, 2.0}) {
      const Vector x = random_vector(rng, H.dim(), 2.0);
      const Vector J = E->prox(t, x).v;
      const double best = E->value(J) + std::pow(H.norm(x - J), 2) / (2.0 * t);
      for (int k = 0; k < 100; ++k) {
        const Vector v = J + random_vector(rng, H.dim(), k < 50 ? 1e-3 : 1.0);
        const double other = E->value(v) + std::pow(H.norm(v - x), 2) / (2.0 * t);
        EXPECT_LE(best, other + 1e-9 * (1.0 + std::abs(best))) << E->id() << " t=" << t;
      }
    }
  }
}

TEST(Yosida, NormsIncreaseAsLambdaDecreases) {
  std::mt19937_64 rng(24);
  for (const auto& op : {qlaplace_operator(10, 3.0), subgradient_operator(abs_energy(2))}) {
    const Vector x = random_vector(rng, op->space().dim());
    double prev = 0.0;
    for (double l = 1.0; l > 1e-6; l *= 0.5) {
      const double y = op->space().norm(op->yosida(l, x));
      EXPECT_GE(y, prev * (1.0 - 1e-9));
      prev = y;
    }
    EXPECT_LE(prev, op->set_norm(x) * (1.0 + 1e-6));
  }
}

TEST(Perturbed, ResolventSolvesTheEquation) {
  const auto A = scalar_operator(1.0);
  const auto AB = perturbed_operator(A, sine_perturbation(0.5));
  EXPECT_DOUBLE_EQ(AB->omega(), 0.5);
  const Vector x = Vector::Constant(1, 1.3);
  const double l = 0.4;
  const double v = AB->resolve(l, x)[0];
  EXPECT_NEAR(v + l * (v + 0.5 * std::sin(v)), 1.3, 1e-12);
}

TEST(Affine, ShiftedScalarClosedForm) {
  const auto op = shifted_operator(scalar_operator(2.0), 0.5);  // I + 0.5 * 2
  const Vector x = Vector::Constant(1, 4.0);
  EXPECT_NEAR(op->resolve(0.25, x)[0], 4.0 / (1.0 + 0.25 * 2.0), 1e-15);
  const auto sh = omega_shift(scalar_operator(1.0), 0.75);
  EXPECT_DOUBLE_EQ(sh->omega(), 0.75);
}

TEST(Kato, EuclideanBracketIsNormalizedInnerProduct) {
  const NormedSpace H = NormedSpace::euclidean(3);
  Vector x(3), y(3);
  x << 1.0, 2.0, -1.0;
  y << 0.5, -1.0, 3.0;
  const auto kb = kato_bracket(H, x, y);
  EXPECT_NEAR(kb.value, x.dot(y) / x.norm(), 1e-6);
  EXPECT_TRUE(kb.monotone);
}
