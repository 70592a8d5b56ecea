// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "interp/error.hpp"
#include "interp/grid.hpp"
#include "interp/spaces.hpp"

using namespace interp;

namespace {

// Closed form of ||chi_(0,h)|| in the weighted Lp space.
double chi_norm(double theta, double p, double h) {
  return std::pow(h, 1.0 - theta) / std::pow(p * (1.0 - theta), 1.0 / p);
}

}  // namespace

TEST(LogGrid, StandardShape) {
  const LogGrid g = LogGrid::standard();
  EXPECT_EQ(g.size(), 2048u);
  EXPECT_DOUBLE_EQ(g.t_min(), 1e-6);
  EXPECT_NEAR(g.t_max(), 1e2, 1e-10);
  EXPECT_NEAR(g.nodes_per_decade(), 2047.0 / 8.0, 1e-9);
  EXPECT_NEAR(std::pow(g.ratio(), 2047.0), 1e8, 1e-2);
}

TEST(LogGrid, WeightsIntegrateConstants) {
  const LogGrid g(1e-3, 10.0, 301);
  double s = 0.0;
  for (double w : g.weights()) s += w;
  EXPECT_NEAR(s, 10.0 - 1e-3, 1e-12);
}

TEST(LogGrid, RefinedKeepsNodes) {
  const LogGrid g(1e-2, 1.0, 65);
  const LogGrid r = g.refined();
  ASSERT_EQ(r.size(), 129u);
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_NEAR(r.node(2 * i), g.node(i), 1e-15 * g.node(i));
}

TEST(LogGrid, DensityCarriesOver) {
  const LogGrid g = LogGrid::standard();
  const LogGrid e = LogGrid::with_density_of(g, 1e-12, 1e2);
  EXPECT_NEAR(e.nodes_per_decade(), g.nodes_per_decade(), 1.0);
  EXPECT_NEAR(e.t_min(), 1e-12, 1e-24);
}

TEST(LogGrid, IndexQueries) {
  const LogGrid g(1.0, 8.0, 4);  // 1, 2, 4, 8
  EXPECT_EQ(g.count_below(4.0), 2u);
  EXPECT_EQ(g.index_at_or_below(5.0), 2u);
  EXPECT_EQ(g.index_at_or_below(0.5), g.size());
}

TEST(GridFunction, BelowGridHoldsFirstValue) {
  const LogGrid g(1e-2, 1.0, 3);
  const GridFunction f(g, {2.0, 3.0, 4.0});
  EXPECT_DOUBLE_EQ(f.at(1e-5), 2.0);
  EXPECT_DOUBLE_EQ(f.at(1.0), 4.0);
}

TEST(WeightedLp, IndicatorNormMatchesClosedForm) {
  const LogGrid g = LogGrid::standard();
  for (double theta : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    for (double p : {1.0, 2.0, 3.5}) {
      const SpaceSpec s = SpaceSpec::weighted_lp(theta, p);
      const double h = g.node(1536);
      EXPECT_NEAR(indicator_norm(s, 0.0, h), chi_norm(theta, p, h), 1e-12 * chi_norm(theta, p, h));
      const double grid_value = norm_E(s, GridFunction::indicator(g, 0.0, h));
      EXPECT_NEAR(grid_value, chi_norm(theta, p, h), 1e-9 * chi_norm(theta, p, h))
          << "theta=" << theta << " p=" << p;
    }
  }
}

TEST(WeightedLp, FrozenUnitIndicator) {
  // ||chi_(0,1)|| = 1/sqrt(2 * 0.5) = 1 for theta = 1/2, p = 2.
  EXPECT_NEAR(indicator_norm(SpaceSpec::weighted_lp(0.5, 2.0), 0.0, 1.0), 1.0, 1e-15);
}

TEST(WeightedLp, RejectsBadParameters) {
  EXPECT_THROW(SpaceSpec::weighted_lp(0.0, 2.0), ParameterError);
  EXPECT_THROW(SpaceSpec::weighted_lp(1.0, 2.0), ParameterError);
  EXPECT_THROW(SpaceSpec::weighted_lp(0.5, 0.5), ParameterError);
}

TEST(WeightedLp, NormIsMonotone) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const LogGrid g(1e-4, 10.0, 257);
  const SpaceSpec s = SpaceSpec::weighted_lp(0.3, 2.5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> a(g.size()), b(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      a[i] = u(rng);
      b[i] = a[i] + u(rng);
    }
    EXPECT_LE(norm_E(s, GridFunction(g, a)), norm_E(s, GridFunction(g, b)));
  }
}

TEST(OtherSpaces, ElementaryValues) {
  const LogGrid g(1e-3, 10.0, 401);
  const GridFunction chi = GridFunction::indicator(g, 0.0, g.node(300));
  const double h = g.node(300);
  EXPECT_NEAR(norm_E(SpaceSpec::l1(), chi), h, 1e-12 * h);
  EXPECT_DOUBLE_EQ(norm_E(SpaceSpec::linf(), chi), 1.0);
  EXPECT_NEAR(norm_E(SpaceSpec::l1_cap_linf(), chi), std::max(h, 1.0), 1e-12);
}

TEST(Hardy, AnalyticBound) {
  EXPECT_DOUBLE_EQ(hardy_bound(SpaceSpec::weighted_lp(0.5, 2.0)), 2.0);
  EXPECT_DOUBLE_EQ(hardy_bound(SpaceSpec::weighted_lp(0.25, 3.0)), 4.0);
  EXPECT_THROW(hardy_bound(SpaceSpec::l1()), PreconditionError);
  EXPECT_THROW(hardy_bound(SpaceSpec::l1_cap_linf()), PreconditionError);
}

TEST(Hardy, ImageOfIndicatorIsExact) {
  const LogGrid g = LogGrid::standard();
  const double tau = g.node(1200);
  const GridFunction img = hardy_apply(GridFunction::indicator(g, 0.0, tau));
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double t = g.node(i);
    const double expect = t <= tau ? 1.0 : tau / t;
    EXPECT_NEAR(img[i], expect, 1e-9) << "t=" << t;
  }
}

TEST(Hardy, InequalityOnRandomSteps) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const LogGrid g(1e-6, 1e2, 1025);
  for (double theta : {0.2, 0.5, 0.8}) {
    const SpaceSpec s = SpaceSpec::weighted_lp(theta, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> v(g.size());
      for (auto& e : v) e = u(rng) < 0.3 ? u(rng) : 0.0;
      const GridFunction f(g, v, Sampling::Step);
      EXPECT_LE(norm_E(s, hardy_apply(f)), hardy_bound(s) * norm_E(s, f) * (1.0 + 1e-9));
    }
  }
}

TEST(Hardy, LowerEstimateApproachesBound) {
  const SpaceSpec s = SpaceSpec::weighted_lp(0.5, 2.0);
  const double est = hardy_norm_estimate(s);
  EXPECT_GT(est, 1.9);
  EXPECT_LE(est, 2.0);
}

TEST(Dilation, NormAndAction) {
  const SpaceSpec s = SpaceSpec::weighted_lp(0.3, 2.0);
  EXPECT_NEAR(dilation_norm(s), std::pow(2.0, -0.7), 1e-15);
  const LogGrid g(1e-8, 1e3, 4097);
  const GridFunction f = GridFunction::from(g, [](double t) { return std::exp(-t) * t / (1.0 + t); });
  const double ratio = norm_E(s, dilation_apply(f)) / norm_E(s, f);
  EXPECT_NEAR(ratio, dilation_norm(s), 1e-3);
}

TEST(SquareSpace, SubstitutionIdentity) {
  const SpaceSpec s = SpaceSpec::weighted_lp(0.3, 2.0);
  const LogGrid g(1e-10, 1e3, 8193);
  auto gfun = [](double r) { return std::exp(-r); };
  const GridFunction G = GridFunction::from(g, gfun);
  const GridFunction F = GridFunction::from(g, [&](double t) { return gfun(std::sqrt(t)) / std::sqrt(t); });
  // ||G||_{E^2} = || t -> G(sqrt t)/sqrt t ||_E.
  EXPECT_NEAR(norm_E_squared(s, G), norm_E(s, F), 2e-3 * norm_E(s, F));
}

TEST(SquareSpace, RequiresThetaBelowHalf) {
  try {
    square_space(SpaceSpec::weighted_lp(0.6, 2.0));
    FAIL() << "expected a precondition error";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("θ < 1/2 required"), std::string::npos);
  }
}

TEST(EmbeddingWitness, MinOfOneAndInverseSquare) {
  const LogGrid g(1e-2, 1e2, 401);
  const GridFunction w = embedding_witness(g);
  for (std::size_t i = 0; i < g.size(); i += 50)
    EXPECT_NEAR(w[i], std::min(1.0, 1.0 / (g.node(i) * g.node(i))), 1e-15);
}
