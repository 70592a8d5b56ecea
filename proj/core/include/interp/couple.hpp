// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "interp/energy.hpp"
#include "interp/normed_space.hpp"
#include "interp/operators.hpp"

namespace interp {

using Functional = std::function<double(const Vector&)>;
using CandidateOracle = std::function<std::vector<Vector>(const Vector& x, double t)>;
// Exact K(x, t) where a closed form exists.
using ClosedFormK = std::function<double(const Vector& x, double t)>;

// A pair (N0, N1) of [0, inf]-valued functions on a finite-dimensional space.
struct InterpolationCouple {
  std::string id;
  NormedSpace space;
  Functional n0;
  Functional n1;
  CandidateOracle candidates;
  ClosedFormK closed_form;
  OperatorPtr op;                   // set for (||.||, |A.|)
  EnergyPtr energy;                 // set for (||.||_H, sqrt E)
  std::optional<Vector> zero_point; // some v0 with N1(v0) = 0
  bool norm_couple = false;         // N0 and N1 are norms
};

// (||.||, |A .|). `zero` is a known zero of A, if any.
InterpolationCouple accretive_couple(OperatorPtr op, std::optional<Vector> zero = std::nullopt);
// (||.||_2, c ||.||_2) on R^dim.
InterpolationCouple scaled_euclidean_couple(Eigen::Index dim, double c);
// Discrete (L1, Linf) on a partition of (0,1) with the given cell widths.
InterpolationCouple l1_linf_couple(Vector cell_widths);
// (N0^a0, N1^a1) for exponents in (0, 1].
InterpolationCouple powered_couple(const InterpolationCouple& base, double a0, double a1);
// (||.||_H, sqrt E).
InterpolationCouple sqrt_energy_couple(EnergyPtr energy);

// int_0^t f*(s) ds for f on cells of the given widths.
double rearrangement_k(const Vector& cell_widths, const Vector& f, double t);

}  // namespace interp
