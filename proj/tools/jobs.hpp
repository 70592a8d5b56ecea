// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "interp/operators.hpp"
#include "interp/report.hpp"

namespace interplab {

// Flags shared by the verify jobs. Empty strings and NaN mean "use the job default".
struct Config {
  std::string op;
  std::string x;
  std::string space;
  double tau = std::numeric_limits<double>::quiet_NaN();
  double h = 0.5;
  double T = 1.0;
  double q = 3.0;
  double theta = std::numeric_limits<double>::quiet_NaN();
  double p = 2.0;
  double eps = 0.1;
  int n = 32;
  int samples = 4;
  double c = 0.25;     // amplitude of the sine perturbation
  std::uint64_t seed = 7;
  bool quick = false;  // coarser grid
};

struct Job {
  std::string id;
  std::string summary;
  std::function<interp::TheoremReport(const Config&)> run;
};

// Point named by Config::x: a comma list (a single value is broadcast), or a
// q-Laplace initial-data family; defaults to 1 in 1-D and the hat elsewhere.
interp::Vector point(const Config& c, const interp::AccretiveOperator& op);

const std::vector<Job>& jobs();
const Job* find_job(const std::string& id);

}  // namespace interplab
