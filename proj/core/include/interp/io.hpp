// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>

#include "interp/energy.hpp"
#include "interp/grid.hpp"
#include "interp/kfunction.hpp"
#include "interp/operators.hpp"
#include "interp/semigroup.hpp"
#include "interp/spaces.hpp"

namespace interp::io {

// "kind:key=value,key=value" or a JSON object {"kind": ..., "params": {...}}.
// A bare token without '=' is stored under "type" (energy:abs).
struct OperatorSpec {
  std::string kind;
  std::map<std::string, std::string> params;
  std::string text() const;
};
OperatorSpec parse_operator_spec(const std::string& text);

// The energy is set for subgradient instances.
struct OperatorBundle {
  OperatorPtr op;
  EnergyPtr energy;
};
// Kinds: scalar (a), matrix (file, omega), qlaplace (q, n), energy (abs|quadratic|box).
// Optional modifiers on any kind: shift=w (A - wI), perturb=c (+ c sin).
OperatorBundle build_operator(const OperatorSpec& spec);

// "theta=0.5,p=2", "l1", "linf", "l1capLinf", or the JSON form {"theta":..,"p":..}.
SpaceSpec parse_space(const std::string& text);
std::string space_json(const SpaceSpec& s);

Vector parse_vector(const std::string& text);  // comma separated
Matrix read_matrix_csv(const std::string& path);

// CSV columns: t,<column>.
std::string grid_function_csv(const GridFunction& f, const std::string& column = "value");
// CSV columns: t,k_over_t.
std::string k_profile_csv(const KProfile& p);
// CSV columns: t,u_0,...,u_{d-1}[,error].
std::string trajectory_csv(const Trajectory& tr);
std::string trajectory_json(const Trajectory& tr);

void write_file(const std::string& path, const std::string& content);

}  // namespace interp::io
