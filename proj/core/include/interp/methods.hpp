// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

#include "interp/kfunction.hpp"
#include "interp/report.hpp"

namespace interp {

struct MeanMethodResult {
  double value = 0.0;    // n0_part + n1_part
  double n0_part = 0.0;  // || N0(x - u(t))/t chi_{(0,tau)} ||_E
  double n1_part = 0.0;  // || N1(u(t)) chi_{(0,tau)} ||_E
  std::size_t cells = 0; // number of distinct cells (t_{n+1}, t_n] that were used
};

// Step curve u(t) = v_n on (t_{n+1}, t_n], t_n = (1+eps)^{-n}, with v_n the
// best K candidate at t_n.
MeanMethodResult mean_method_tau(const InterpolationCouple& c, const Vector& x,
                                 const SpaceSpec& space, double tau, double eps,
                                 const LogGrid& grid = LogGrid::standard(),
                                 const KOptions& opt = {});

// N^tau <= mean value <= 2(1+eps)(N^tau + eps ||min(1, 1/t^2)||_E).
TheoremReport check_mean_equivalence(const InterpolationCouple& c, const Vector& x,
                                     const SpaceSpec& space, double tau, double eps,
                                     const LogGrid& grid = LogGrid::standard(),
                                     const KOptions& opt = {});

struct TraceResult {
  double value = 0.0;            // derivative_part + generator_part
  double derivative_part = 0.0;  // || ||w'(l)|| chi ||_E
  double generator_part = 0.0;   // || |A w(l)| chi ||_E
  double resolvent_norm = 0.0;   // || ||x - J_l x||/l chi ||_E
  double bound = 0.0;            // 2/(1 - tau omega) * resolvent_norm
  double curve_mean_objective = 0.0;  // || ||x - w(l)||/l chi || + generator_part
};

// Trace objective along w(l) = J_l x with a finite-difference derivative.
TraceResult trace_method_upper(const InterpolationCouple& c, const Vector& x,
                               const SpaceSpec& space, double tau,
                               const LogGrid& grid = LogGrid::standard());

// N^tau <= N <= N^tau + N0(x - v0) ||chi_{(tau,inf)}/t||_E with N taken over
// the whole grid.
TheoremReport k_vs_full_relation(const InterpolationCouple& c, const Vector& x,
                                 const SpaceSpec& space, double tau,
                                 const LogGrid& grid = LogGrid::standard());

// Constants for M0(Tx - Ty) <= L N0(x - y) and M1(Tx) <= a N1(x) + b(||x||).
struct TransferConstants {
  double L = 1.0;
  double a = 1.0;
  std::function<double(double)> b = [](double) { return 0.0; };
};

// For each sample x: along a witness curve u for x (the resolvent curve for
// accretive couples, the mean-method step curve otherwise) checks
//   ||M0(Tx - Tu)/t chi|| + ||M1(Tu) chi|| <= L||N0(x-u)/t chi|| + a||N1(u) chi|| + b~
// with b~ = ||b(||u||) chi||. Hypothesis violations along the curve withhold
// the verdict and are listed.
TheoremReport interpolation_theorem_check(const std::function<Vector(const Vector&)>& T,
                                          const InterpolationCouple& X,
                                          const InterpolationCouple& Y, const SpaceSpec& space,
                                          double tau, const std::vector<Vector>& samples,
                                          const TransferConstants& k,
                                          const LogGrid& grid = LogGrid::standard());

}  // namespace interp
