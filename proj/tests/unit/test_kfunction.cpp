// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "interp/couple.hpp"
#include "interp/error.hpp"
#include "interp/kfunction.hpp"

using namespace interp;

namespace {

// K(f, t; L1, Linf) = min over levels l >= 0 of ||(|f| - l)_+||_1 + t l; piecewise
// linear in l, so a breakpoint attains it.
double truncation_k(const Vector& w, const Vector& f, double t) {
  double best = kInf;
  std::vector<double> levels{0.0};
  for (double v : f) levels.push_back(std::abs(v));
  for (double l : levels) {
    double s = t * l;
    for (Eigen::Index j = 0; j < f.size(); ++j) s += w[j] * std::max(0.0, std::abs(f[j]) - l);
    best = std::min(best, s);
  }
  return best;
}

}  // namespace

TEST(KScalar, MatchesMinFormula) {
  // K(x, t) = |x| min(1, a t) for A = a id on R.
  for (double a : {0.5, 1.0, 3.0}) {
    const auto c = accretive_couple(scalar_operator(a));
    for (double x : {-2.0, 0.7}) {
      for (double t : {1e-4, 0.1, 1.0 / a, 2.0, 50.0}) {
        const Vector xv = Vector::Constant(1, x);
        const double ref = std::abs(x) * std::min(1.0, a * t);
        EXPECT_NEAR(k_function(c, xv, t).value, ref, 1e-12 * (1.0 + ref));
        KOptions bf;
        bf.brute_force = true;
        EXPECT_NEAR(k_function(c, xv, t, bf).value, ref, 1e-12 * (1.0 + ref));
      }
    }
  }
}

TEST(KScalar, FrozenInterpolationFunction) {
  // K/t = min(1/t, 1) so N on (0, 1) in theta = 1/2, p = 2 is ||chi_(0,1)|| = 1.
  const auto c = accretive_couple(scalar_operator(1.0));
  const double N = interp_function_tau(c, Vector::Ones(1), SpaceSpec::weighted_lp(0.5, 2.0), 1.0);
  // t = 1 falls between nodes; the linear interpolant of min(1/t, 1) costs ~1e-6 there.
  EXPECT_NEAR(N, 1.0, 1e-5);
}

TEST(KScaled, ClosedFormAgreesWithBruteForce) {
  const auto c = scaled_euclidean_couple(2, 1.5);
  auto open = c;
  open.closed_form = nullptr;
  open.candidates = nullptr;
  KOptions bf;
  bf.brute_force = true;
  Vector x(2);
  x << 0.3, -1.1;
  for (double t : {0.01, 0.5, 0.66, 0.7, 3.0}) {
    EXPECT_NEAR(k_function(open, x, t, bf).value, k_function(c, x, t).value, 1e-9);
  }
}

TEST(KRearrangement, EqualsTruncationFormula) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-3.0, 3.0), wd(0.1, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    Vector w(7), f(7);
    for (int j = 0; j < 7; ++j) w[j] = wd(rng), f[j] = u(rng);
    for (double t : {0.05, 0.4, 1.3, 10.0}) EXPECT_NEAR(rearrangement_k(w, f, t), truncation_k(w, f, t), 1e-12);
  }
}

TEST(KRearrangement, CandidatesReachClosedForm) {
  Vector w(4), f(4);
  w << 0.5, 0.25, 0.125, 0.125;
  f << 1.0, -3.0, 2.0, 0.5;
  auto c = l1_linf_couple(w);
  const auto closed = c.closed_form;
  c.closed_form = nullptr;
  for (double t : {0.1, 0.3, 0.6, 2.0}) EXPECT_NEAR(k_function(c, f, t).value, closed(f, t), 1e-12);
}

TEST(KSqrtEnergy, QuadraticScalar) {
  // E(v) = v^2/2: K(x, t) = |x| min(1, t / sqrt 2).
  const auto c = sqrt_energy_couple(quadratic_energy(Matrix::Identity(1, 1), NormedSpace::euclidean(1)));
  KOptions bf;
  bf.brute_force = true;
  for (double t : {0.01, 1.0, 1.4, 1.5, 5.0}) {
    const double ref = 2.0 * std::min(1.0, t / std::sqrt(2.0));
    EXPECT_NEAR(k_function(c, Vector::Constant(1, 2.0), t, bf).value, ref, 1e-9);
  }
}

TEST(KProfile, ShapeInvariants) {
  const auto op = qlaplace_operator(16, 3.0);
  const auto c = accretive_couple(op);
  Vector x(16);
  for (int i = 0; i < 16; ++i) x[i] = std::sin(0.4 * i) + 0.3 * (i % 3);
  const LogGrid g(1e-6, 1e2, 257);
  const auto p = k_profile(c, x, g);
  const double xn = op->space().norm(x), ax = op->set_norm(x);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double K = p.k_over_t[i] * g.node(i);
    EXPECT_LE(K, xn * (1.0 + 1e-12));                  // v = 0
    EXPECT_LE(K, g.node(i) * ax * (1.0 + 1e-9));       // v = x
    if (i > 0) {
      EXPECT_GE(K, p.k_over_t[i - 1] * g.node(i - 1) * (1.0 - 1e-12));  // nondecreasing
      EXPECT_LE(p.k_over_t[i], p.k_over_t[i - 1] * (1.0 + 1e-12));        // K/t nonincreasing
    }
  }
}

TEST(KProfile, ConcaveOnRandomTriples) {
  const auto c = accretive_couple(subgradient_operator(abs_energy(2)));
  Vector x(2);
  x << 1.0, -0.4;
  KOptions bf;
  bf.brute_force = true;
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.01, 3.0);
  for (int trial = 0; trial < 30; ++trial) {
    double a = u(rng), b = u(rng);
    if (a > b) std::swap(a, b);
    const double m = 0.5 * (a + b);
    const double Ka = k_function(c, x, a, bf).value, Kb = k_function(c, x, b, bf).value;
    EXPECT_GE(k_function(c, x, m, bf).value, 0.5 * (Ka + Kb) - 1e-9);
  }
}

TEST(KProfile, BruteForceRejectsHighDimension) {
  const auto c = accretive_couple(qlaplace_operator(8, 2.0));
  KOptions bf;
  bf.brute_force = true;
  EXPECT_THROW(k_function(c, Vector::Ones(8), 0.1, bf), ParameterError);
}

TEST(Powered, ExponentsApply) {
  const auto base = scaled_euclidean_couple(1, 1.0);
  const auto c = powered_couple(base, 0.5, 1.0);
  const Vector v = Vector::Constant(1, 4.0);
  EXPECT_DOUBLE_EQ(c.n0(v), 2.0);
  EXPECT_DOUBLE_EQ(c.n1(v), 4.0);
  EXPECT_THROW(powered_couple(base, 1.5, 1.0), ParameterError);
}
