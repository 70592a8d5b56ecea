// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "interp/error.hpp"
#include "interp/harness.hpp"

using namespace interp;

namespace {

HarnessOptions coarse() {
  HarnessOptions o;
  o.grid = LogGrid(1e-6, 1e2, 512);
  return o;
}

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

}  // namespace

TEST(Th41, ScalarIdentityHasNoViolations) {
  const auto rep = check_th41(scalar_operator(1.0), Vector::Ones(1), 1.0, coarse());
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.violations(), 0u);
  EXPECT_LE(rep.worst_ratio(), 1.0);
}

TEST(Th41, RejectsTauOmegaAtLeastOne) {
  const auto op = omega_shift(scalar_operator(1.0), 1.0);
  try {
    check_th41(op, Vector::Ones(1), 1.0, coarse());
    FAIL();
  } catch (const ParameterError& e) {
    EXPECT_NE(std::string(e.what()).find("τω < 1"), std::string::npos);
  }
}

TEST(Cor42, ConstantAtHalfTauOmega) {
  const auto op = omega_shift(scalar_operator(1.0), 0.5);
  const auto rep = check_cor42(op, Vector::Ones(1), SpaceSpec::weighted_lp(0.5, 2.0), 1.0, coarse());
  EXPECT_TRUE(rep.passed()) << rep.to_json();
  bool seen = false;
  for (const auto& r : rep.rows())
    if (r.chain == "a.upper") {
      EXPECT_NEAR(r.constant, 3.0, 1e-15);
      seen = true;
    }
  EXPECT_TRUE(seen);
}

TEST(Finiteness, DivergentAndConvergentFamilies) {
  const LogGrid g(1e-6, 1e2, 512);
  // int_{t_min}^1 dt/t grows without bound as t_min -> 0.
  const auto div = finiteness_indicator(
      [](const LogGrid& h) { return std::log(1.0 / h.t_min()) * std::log(1.0 / h.t_min()); }, g);
  EXPECT_FALSE(div.finite);
  EXPECT_TRUE(div.stable);
  const auto conv = finiteness_indicator([](const LogGrid& h) { return 1.0 - h.t_min(); }, g);
  EXPECT_TRUE(conv.finite);
  // sqrt(log) divergence: slow, but the increments do not shrink fast enough.
  const auto slow = finiteness_indicator(
      [](const LogGrid& h) { return std::sqrt(std::log(1.0 / h.t_min())); }, g);
  EXPECT_FALSE(slow.finite);
  // Large jump on the first extension that then saturates.
  const auto late = finiteness_indicator(
      [](const LogGrid& h) { return 1.0 - 0.99 * std::pow(h.t_min() / 1e-6, 0.1); }, g);
  EXPECT_TRUE(late.finite);
  const auto capped = finiteness_indicator([](const LogGrid&) { return 1e13; }, g);
  EXPECT_FALSE(capped.finite);
}

TEST(DomainChain, BoxInteriorAndExterior) {
  const auto op = subgradient_operator(
      box_indicator(Vector::Constant(1, -1.0), Vector::Constant(1, 1.0), NormedSpace::euclidean(1)));
  const auto rep = check_domain_chain(op, 0.5, SpaceSpec::weighted_lp(0.5, 2.0), 1.0,
                                      {Vector::Constant(1, 0.3), Vector::Constant(1, 1.7)}, coarse());
  EXPECT_TRUE(rep.passed()) << rep.to_json();
  EXPECT_EQ(rep.metric_or("sample0.member", -1.0), 1.0);
  EXPECT_EQ(rep.metric_or("sample1.member", -1.0), 0.0);
}

TEST(Perturbation, SineOnScalar) {
  Domination d;
  d.a = 0.3;
  const auto rep = check_perturbation(scalar_operator(1.0), sine_perturbation(0.3), d,
                                      SpaceSpec::weighted_lp(0.5, 2.0), 1.0,
                                      {Vector::Ones(1), Vector::Constant(1, -2.0)}, coarse());
  EXPECT_TRUE(rep.passed()) << rep.to_json();
}

TEST(Perturbation, LargeDominationConstantWithholds) {
  Domination d;
  d.a = 1.5;
  const auto rep = check_perturbation(scalar_operator(1.0), zero_perturbation(), d,
                                      SpaceSpec::weighted_lp(0.5, 2.0), 1.0, {Vector::Ones(1)}, coarse());
  EXPECT_EQ(rep.verdict(), Verdict::Withheld);
}

TEST(Regularizing, LinearConstantIsInverseE) {
  Matrix D = Matrix::Zero(2, 2);
  D(0, 0) = 1.0;
  D(1, 1) = 5.0;
  EXPECT_NEAR(linear_regularizing_constant(D).sup, std::exp(-1.0), 1e-3);
  const auto lin = linear_regularizing_constant(laplacian(16));
  EXPECT_NEAR(lin.sup, std::exp(-1.0), 1e-3);
}

TEST(Regularizing, SubgradientQuadratic) {
  const auto op = subgradient_operator(quadratic_energy(Matrix::Identity(1, 1), NormedSpace::euclidean(1)));
  const auto rep = check_regularizing(op, Vector::Ones(1), SpaceSpec::weighted_lp(0.5, 2.0), 1.0, coarse());
  EXPECT_TRUE(rep.passed()) << rep.to_json();
}

TEST(Thp1, GammaAndRejection) {
  const auto E = quadratic_energy(Matrix::Identity(1, 1), NormedSpace::euclidean(1));
  const auto rep = check_thp1(E, Vector::Ones(1), SpaceSpec::weighted_lp(0.25, 2.0), 1.0, coarse());
  EXPECT_TRUE(rep.passed()) << rep.to_json();
  EXPECT_NEAR(rep.metric_or("gamma", 0.0), std::pow(2.0, 0.25 - 0.5), 1e-15);
  try {
    check_thp1(E, Vector::Ones(1), SpaceSpec::weighted_lp(0.5, 2.0), 1.0, coarse());
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("θ < 1/2 required"), std::string::npos);
  }
}

TEST(QLaplace, ExponentMap) {
  const auto em = qlaplace_exponents(4.0, 0.25, 2.0);
  EXPECT_NEAR(em.alpha, 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(em.r, 3.0, 1e-15);
  const auto two = qlaplace_exponents(2.0, 0.4, 2.0);  // q = 2: alpha = 2 theta, r = p
  EXPECT_NEAR(two.alpha, 0.8, 1e-15);
  EXPECT_NEAR(two.r, 2.0, 1e-15);
}

TEST(QLaplace, InitialDataFamilies) {
  const auto a = qlaplace_initial_data(32, 7), b = qlaplace_initial_data(32, 7), c = qlaplace_initial_data(32, 8);
  ASSERT_EQ(a.size(), 3u);
  EXPECT_EQ(a[0].family, "smooth");
  EXPECT_EQ(a[1].family, "hat");
  EXPECT_EQ(a[2].family, "rough");
  EXPECT_EQ(a[2].u0, b[2].u0);
  EXPECT_NE(a[2].u0, c[2].u0);
  EXPECT_EQ(a[0].u0, c[0].u0);
}

TEST(QLaplace, ZeroDatumGivesZeros) {
  const auto rep = qlaplace_regularity_experiment(3.0, 0.25, 2.0, {{"zero", Vector::Zero(16)}}, 1.0, 16, coarse());
  EXPECT_TRUE(rep.passed()) << rep.to_json();
  EXPECT_EQ(rep.metric_or("zero.time_derivative_norm", -1.0), 0.0);
  EXPECT_EQ(rep.metric_or("zero.resolvent_norm", -1.0), 0.0);
}

TEST(Reports, BitIdenticalAcrossRuns) {
  const auto op = qlaplace_operator(8, 3.0);
  const Vector x = Vector::LinSpaced(8, 0.1, 0.9);
  const auto a = check_th41(op, x, 0.5, coarse()), b = check_th41(op, x, 0.5, coarse());
  EXPECT_EQ(a.to_json(), b.to_json());
  EXPECT_EQ(a.to_csv(), b.to_csv());
  EXPECT_NE(a.to_json().find("\"schema_version\""), std::string::npos);
  EXPECT_EQ(a.to_csv().substr(0, a.to_csv().find('\n')),
            "theorem,instance,chain,node_t,lhs,rhs,constant,slack,residual,pass");
}
