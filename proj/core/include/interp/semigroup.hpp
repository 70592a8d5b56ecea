// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "interp/operators.hpp"
#include "interp/report.hpp"

namespace interp {

enum class Scheme { ExponentialFormula, ImplicitEuler };
std::string to_string(Scheme s);

struct Trajectory {
  std::string op_id;
  Vector x0;
  std::vector<double> times;   // starts at 0
  std::vector<Vector> states;  // states[0] == x0
  Scheme scheme = Scheme::ExponentialFormula;
  std::size_t steps = 0;       // resolvent steps taken by the finest run
  double max_dt = 0.0;
  double omega = 0.0;
  // Sup-norm gaps between successive refinement levels.
  std::vector<double> cauchy;
  // Per recorded time, ||u_m - u_2m||; empty unless requested.
  std::vector<double> error;
  // The coarser Richardson run at the same times; empty unless requested.
  std::vector<Vector> coarse_states;
};

// (J_{t/n})^k x0 for k = 0..n, recording every `stride`-th step and the last one.
Trajectory evolve(const AccretiveOperator& op, const Vector& x0, double t, std::size_t n,
                  std::size_t stride = 1);

// Runs n, 2n, ..., 2^levels n steps; returns the finest run sampled at the
// times k t/n with the Cauchy gaps between levels.
Trajectory evolve_refined(const AccretiveOperator& op, const Vector& x0, double t,
                          std::size_t n, int levels);

// Implicit Euler through 0 < times[0] < times[1] < ..., with `substeps` equal
// steps inside each interval. With `richardson` the run is repeated with
// 2*substeps, the finer states are returned and the gaps fill `error`.
Trajectory evolve_on_grid(const AccretiveOperator& op, const Vector& x0,
                          const std::vector<double>& times, std::size_t substeps,
                          bool richardson = true);

enum class VariationSource { ResolventCurve, SemigroupOrbit, Other };

struct VariationProfile {
  VariationSource source = VariationSource::Other;
  std::vector<double> times;
  std::vector<double> var;         // Var_f(times[i]) over [0, times[i]]
  std::vector<double> derivative;  // difference quotients of var
  int levels = 0;                  // dyadic refinement levels used
  bool converged = false;
};

// Partition sums over {0} U times, each interval split dyadically until the
// total grows by less than `tol` relative, or max_levels is reached.
VariationProfile variation_profile(const std::function<Vector(double)>& curve,
                                   const NormedSpace& space, const std::vector<double>& times,
                                   VariationSource source = VariationSource::Other,
                                   double tol = 1e-10, int max_levels = 4);

// t -> J_t x with J_0 x = x.
std::function<Vector(double)> resolvent_curve_fn(OperatorPtr op, Vector x);

// Integral inequality along a trajectory for graph pairs (xh, fh) with fh in A xh:
//   ||u(t) - xh|| <= ||u(s) - xh|| + int_s^t [u - xh, -fh] + omega int_s^t ||u - xh||.
TheoremReport integral_solution_check(const AccretiveOperator& op, const Trajectory& traj,
                                      const std::vector<std::pair<Vector, Vector>>& graph);

// Graph pairs (J_l u, A_l u) for the given l and u.
std::vector<std::pair<Vector, Vector>> graph_samples(const AccretiveOperator& op,
                                                     const std::vector<Vector>& points,
                                                     const std::vector<double>& lambdas);

// Witness g = S(.)J_t x0 for the (C, Lip) K-functional on [0, T], one set of
// rows per t in `ts`; both orbits use `steps` implicit Euler steps.
TheoremReport orbit_interpolation_check(const AccretiveOperator& op, const Vector& x0, double T,
                                        const std::vector<double>& ts, std::size_t steps = 400);

}  // namespace interp
