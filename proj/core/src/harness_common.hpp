// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "interp/harness.hpp"
#include "interp/semigroup.hpp"

namespace interp::detail {

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

// Nodes needed to integrate over (0, tau): up to the first node >= tau.
inline std::size_t nodes_through(const LogGrid& grid, double tau) {
  return std::min(grid.count_below(tau) + 1, grid.size());
}

inline std::vector<double> head_nodes(const LogGrid& grid, std::size_t m) {
  return {grid.nodes().begin(), grid.nodes().begin() + static_cast<std::ptrdiff_t>(m)};
}

// Values on the first nodes, zero beyond.
inline GridFunction on_grid(const LogGrid& grid, std::vector<double> head) {
  head.resize(grid.size(), 0.0);
  return GridFunction(grid, std::move(head));
}

inline double norm_on(const SpaceSpec& s, const LogGrid& g, const std::vector<double>& v,
                      double lo, double hi) {
  return norm_E(s, on_grid(g, v), Window{lo, hi});
}

// Rounding and solver error of quantities of the form ||x - J_t x||/t.
inline double noise(const AccretiveOperator& op, double xnorm, double t, double value) {
  return 64.0 * kEps * (std::abs(value) + xnorm / t) +
         10.0 * op.resolve_tolerance() * (1.0 + xnorm);
}

struct ResolventData {
  std::vector<double> t;
  std::vector<Vector> J;
  std::vector<double> R;    // ||x - J_t x||/t
  std::vector<double> AJ;   // |A J_t x|, capped by R
};
ResolventData resolvent_data(const AccretiveOperator& op, const Vector& x,
                             const std::vector<double>& t);

struct OrbitData {
  std::vector<Vector> S;      // S(t_i)x
  std::vector<double> err;    // error estimate of S(t_i)x
  std::vector<Vector> coarse; // Richardson partner (empty when exact)
  bool exact = false;
};
OrbitData orbit_data(const AccretiveOperator& op, const Vector& x, const std::vector<double>& t,
                     std::size_t substeps);

KOptions k_options(const HarnessOptions& opt, Eigen::Index dim);
// K lower bounds are trustworthy when K comes from brute force or a closed form.
bool k_two_sided(const InterpolationCouple& c, const KOptions& k);

// K(x, t_i) from a profile.
inline double k_at(const KProfile& p, std::size_t i) {
  return p.k_over_t[i] * p.k_over_t.grid().node(i);
}

// Cumulative trapezoid of g over [0, t_i] with g(0) = 0, and a Richardson
// error estimate from the rule on every other node.
struct Cumulative {
  std::vector<double> value;
  std::vector<double> error;
};
Cumulative cumulative_integral(const std::vector<double>& t, const std::vector<double>& g);

// Centered FD slack for derivative chains: 10 |c(t_{i-1}) - c(t_{i+1})|.
std::vector<double> fd_slack(const std::vector<double>& comparator);

double worst_ratio_of(const TheoremReport& r, const std::string& chain_prefix);

}  // namespace interp::detail
