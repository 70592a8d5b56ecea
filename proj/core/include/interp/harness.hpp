// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "interp/couple.hpp"
#include "interp/grid.hpp"
#include "interp/kfunction.hpp"
#include "interp/operators.hpp"
#include "interp/report.hpp"
#include "interp/spaces.hpp"

namespace interp {

struct HarnessOptions {
  LogGrid grid = LogGrid::standard();
  std::size_t substeps = 2;      // implicit Euler steps per grid interval (doubled for Richardson)
  bool brute_force = true;       // brute-force K when dim <= 3
  int variation_levels = 4;      // dyadic refinement cap for variation profiles
  double finiteness_cap = 1e12;
  bool check_refinement = true;  // recompute finiteness indicators on the refined grid
  std::uint64_t seed = 7;
};

// Pointwise chains (i)-(iv) between K, the resolvent, the variation of the
// resolvent curve and the orbit, at every grid node in (0, tau).
TheoremReport check_th41(OperatorPtr op, const Vector& x, double tau,
                         const HarnessOptions& opt = {});

// Norm-level chains (a)-(e) in E over (0, tau).
TheoremReport check_cor42(OperatorPtr op, const Vector& x, const SpaceSpec& space, double tau,
                          const HarnessOptions& opt = {});

// Finiteness of t -> f(t) chi_{(0,tau)} in E, decided from the growth of the
// norm as the grid reaches 1e-6 and then 1e-12 times further towards 0.
struct FinitenessIndicator {
  bool finite = true;
  double base = 0.0;
  double extended = 0.0;
  bool stable = true;  // same verdict on the refined grid
};
FinitenessIndicator finiteness_indicator(const std::function<double(const LogGrid&)>& value,
                                         const LogGrid& grid, double cap = 1e12,
                                         bool check_refinement = true);

// Every characterization of the effective domain, for A and for I + hA, on
// each sample; all indicators must agree, and agree with the known domain
// status of the sample.
TheoremReport check_domain_chain(OperatorPtr op, double h, const SpaceSpec& space, double tau,
                                 const std::vector<Vector>& samples,
                                 const HarnessOptions& opt = {});

// Displacement bound for the orbit and, on WeightedLp spaces, the fitted
// exponent of h -> ||S(h)x - x|| against theta - 0.05.
TheoremReport check_holder(OperatorPtr op, const Vector& x, const SpaceSpec& space, double tau,
                           double T, const HarnessOptions& opt = {});

// |Bv| <= a |Av| + b(||v||).
struct Domination {
  double a = 0.5;
  std::function<double(double)> b = [](double) { return 0.0; };
};

TheoremReport check_perturbation(OperatorPtr A, const Perturbation& B, const Domination& dom,
                                 const SpaceSpec& space, double tau,
                                 const std::vector<Vector>& samples,
                                 const HarnessOptions& opt = {});

// Two-sided bound between N_E^tau and || |AS(t)x| chi_{(0,tau)} ||_E.
TheoremReport check_regularizing(OperatorPtr op, const Vector& x, const SpaceSpec& space,
                                 double tau, const HarnessOptions& opt = {});

// sup_t || t M (I + tM/n)^{-n} || over t > 0 with n = 2^log2_n, in the
// Euclidean operator norm.
struct LinearRegularizing {
  double sup = 0.0;
  double argmax = 0.0;
};
LinearRegularizing linear_regularizing_constant(const Matrix& M, int log2_n = 12);

// (||.||_H, sqrt E) against the resolvent of the subgradient of E on E^2.
// Throws PreconditionError unless theta < 1/2.
TheoremReport check_thp1(EnergyPtr energy, const Vector& x, const SpaceSpec& space, double tau,
                         const HarnessOptions& opt = {});

struct ExponentMap {
  double alpha;
  double r;
};
ExponentMap qlaplace_exponents(double q, double theta, double p);

// Initial data on the n interior nodes of (0, 1).
struct InitialDatum {
  std::string family;
  Vector u0;
};
std::vector<InitialDatum> qlaplace_initial_data(int n_interior, std::uint64_t seed);

TheoremReport qlaplace_regularity_experiment(double q, double theta, double p,
                                             const std::vector<InitialDatum>& data, double T,
                                             int n_interior = 64,
                                             const HarnessOptions& opt = {});

}  // namespace interp
