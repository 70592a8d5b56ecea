// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "interp/couple.hpp"
#include "interp/grid.hpp"
#include "interp/spaces.hpp"

namespace interp {

struct KOptions {
  bool brute_force = false;  // grid a compact candidate set (dim <= 3 only)
  bool refine = true;        // golden-section search along segments from the best candidate
};

struct KValue {
  double value = kInf;
  Vector minimizer;
  double n1 = kInf;  // N1 at the minimizer
};

// Certified upper bound for K(x, t) = inf N0(x - v) + t N1(v).
KValue k_function(const InterpolationCouple& c, const Vector& x, double t,
                  const KOptions& opt = {});

enum class KMethod { BruteForce, Resolvent, Rearrangement, Candidates };
std::string to_string(KMethod m);

struct KProfile {
  std::string couple_id;
  Vector x;
  GridFunction k_over_t;
  KMethod method;
};

// K(x, t_i)/t_i on every node. The raw upper bounds are tightened with the
// monotonicity of t -> K and t -> K/t, both of which hold for every couple,
// so the result is still an upper bound and exactly monotone.
KProfile k_profile(const InterpolationCouple& c, const Vector& x, const LogGrid& grid,
                   const KOptions& opt = {});

// N_E^tau(x) = || K(x,t)/t chi_{(0,tau)} ||_E.
double interp_function_tau(const KProfile& profile, const SpaceSpec& space, double tau);
double interp_function_tau(const InterpolationCouple& c, const Vector& x, const SpaceSpec& space,
                           double tau, const LogGrid& grid = LogGrid::standard(),
                           const KOptions& opt = {});

}  // namespace interp
