// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "interp/error.hpp"
#include "interp/methods.hpp"

using namespace interp;

TEST(Mean, RandomScalarInstancesSatisfyEquivalence) {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> ua(0.2, 5.0), ux(-3.0, 3.0), ut(0.2, 0.8);
  const LogGrid g(1e-6, 1e2, 1024);
  KOptions bf;
  bf.brute_force = true;
  for (int trial = 0; trial < 6; ++trial) {
    const auto c = accretive_couple(scalar_operator(ua(rng)));
    const Vector x = Vector::Constant(1, ux(rng));
    const SpaceSpec s = SpaceSpec::weighted_lp(ut(rng), 2.0);
    for (double eps : {0.5, 0.1}) {
      const auto rep = check_mean_equivalence(c, x, s, 1.0, eps, g, bf);
      EXPECT_TRUE(rep.passed()) << rep.to_json();
    }
  }
}

TEST(Mean, CellCountGrowsAsEpsilonShrinks) {
  const auto c = accretive_couple(scalar_operator(1.0));
  const SpaceSpec s = SpaceSpec::weighted_lp(0.5, 2.0);
  const auto coarse = mean_method_tau(c, Vector::Ones(1), s, 1.0, 0.5);
  const auto fine = mean_method_tau(c, Vector::Ones(1), s, 1.0, 0.05);
  EXPECT_GT(fine.cells, coarse.cells);
  EXPECT_THROW(mean_method_tau(c, Vector::Ones(1), s, 1.0, 0.0), ParameterError);
  EXPECT_THROW(mean_method_tau(c, Vector::Ones(1), s, 1.0, 1.5), ParameterError);
}

TEST(Trace, BoundedByResolventNorm) {
  const SpaceSpec s = SpaceSpec::weighted_lp(0.4, 2.0);
  for (const auto& op : {scalar_operator(1.0), qlaplace_operator(12, 3.0), omega_shift(scalar_operator(1.0), 0.5)}) {
    const auto c = accretive_couple(op);
    Vector x = Vector::LinSpaced(op->space().dim(), 0.2, 1.0);
    const auto r = trace_method_upper(c, x, s, 1.0);
    EXPECT_LE(r.value, r.bound * (1.0 + 1e-6)) << op->id();
    EXPECT_GT(r.value, 0.0);
  }
}

TEST(Trace, RequiresTauOmegaBelowOne) {
  const auto c = accretive_couple(omega_shift(scalar_operator(1.0), 2.0));
  EXPECT_THROW(trace_method_upper(c, Vector::Ones(1), SpaceSpec::weighted_lp(0.5, 2.0), 1.0),
               ParameterError);
}

TEST(FullRelation, TruncationAndTail) {
  const auto c = accretive_couple(scalar_operator(1.0), Vector::Zero(1));
  const auto rep = k_vs_full_relation(c, Vector::Constant(1, 2.0), SpaceSpec::weighted_lp(0.5, 2.0), 0.5);
  EXPECT_TRUE(rep.passed()) << rep.to_json();
}

TEST(FullRelation, NeedsZeroPoint) {
  const auto c = accretive_couple(scalar_operator(1.0));
  EXPECT_THROW(k_vs_full_relation(c, Vector::Ones(1), SpaceSpec::weighted_lp(0.5, 2.0), 0.5),
               PreconditionError);
}

TEST(InterpolationTheorem, ContractionTransfers) {
  // T = 0.5 id maps (|.|, |A.|) into itself with L = a = 0.5 for linear A.
  const auto X = accretive_couple(qlaplace_operator(8, 2.0));
  std::vector<Vector> samples{Vector::LinSpaced(8, 0.0, 1.0), Vector::Ones(8)};
  TransferConstants k;
  k.L = 0.5;
  k.a = 0.5;
  const auto rep = interpolation_theorem_check([](const Vector& v) { return Vector(0.5 * v); }, X, X,
                                               SpaceSpec::weighted_lp(0.5, 2.0), 1.0, samples, k);
  EXPECT_EQ(rep.verdict(), Verdict::Pass) << rep.to_json();
}

TEST(InterpolationTheorem, FalseHypothesisWithholds) {
  const auto X = accretive_couple(scalar_operator(1.0));
  TransferConstants k;  // L = a = 1, but T doubles norms
  const auto rep = interpolation_theorem_check([](const Vector& v) { return Vector(2.0 * v); }, X, X,
                                               SpaceSpec::weighted_lp(0.5, 2.0), 1.0, {Vector::Ones(1)}, k);
  EXPECT_EQ(rep.verdict(), Verdict::Withheld);
}
