// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "interp/grid.hpp"

namespace interp {

enum class SpaceKind { WeightedLp, L1, Linf, L1capLinf };

// Banach function space over (0, inf). WeightedLp(theta, p) is
// L^p(0, inf; t^{p(1-theta)-1} dt).
class SpaceSpec {
 public:
  static SpaceSpec weighted_lp(double theta, double p);
  static SpaceSpec l1();
  static SpaceSpec linf();
  static SpaceSpec l1_cap_linf();

  SpaceKind kind() const { return kind_; }
  double theta() const { return theta_; }  // NaN unless WeightedLp
  double p() const { return p_; }          // 1 for L1, inf for Linf
  // Exponent alpha of the weight t^alpha; 0 for L1.
  double weight_exponent() const;
  std::string describe() const;

  // theta is NaN off WeightedLp, so compare by kind first.
  bool operator==(const SpaceSpec& o) const {
    return kind_ == o.kind_ && (kind_ != SpaceKind::WeightedLp || (theta_ == o.theta_ && p_ == o.p_));
  }

 private:
  SpaceSpec(SpaceKind k, double theta, double p) : kind_(k), theta_(theta), p_(p) {}
  SpaceKind kind_;
  double theta_;
  double p_;
};

// Open interval (lower, upper) to which a function is restricted before the
// norm is taken. Partial cells at the ends are integrated exactly for the
// sampling model in use.
struct Window {
  double lower = 0.0;
  double upper = kInf;
};

double norm_E(const SpaceSpec& space, const GridFunction& f, Window w = {});

// ||chi_{(a,b)}||_E in closed form.
double indicator_norm(const SpaceSpec& space, double a, double b);
// ||chi_{(tau,inf)}(t)/t||_E in closed form (inf where not integrable).
double tail_norm_over_t(const SpaceSpec& space, double tau);
// min{1, 1/t^2}, which lies in L1 and Linf.
GridFunction embedding_witness(const LogGrid& grid);

// Pf(t) = (1/t) int_0^t f.
GridFunction hardy_apply(const GridFunction& f);
// Analytic upper bound for the operator norm of P on `space`.
double hardy_bound(const SpaceSpec& space);
// Lower estimate of ||P|| from trial functions t^{-(1-theta)+eps} chi_{(0,1)}.
double hardy_norm_estimate(const SpaceSpec& space, int trial_count = 8);

// (D_2 f)(t) = f(2t).
GridFunction dilation_apply(const GridFunction& f);
// ||D_2|| on WeightedLp; 1 for the other kinds (an upper bound there).
double dilation_norm(const SpaceSpec& space);

// E^2 = { g : t -> g(sqrt t)/sqrt t in E }. As a set this is WeightedLp(2 theta, p).
SpaceSpec square_space(const SpaceSpec& space);
// ||g||_{E^2} = ||g(sqrt t)/sqrt t||_E = 2^{1/p} ||g||_{WeightedLp(2 theta, p)}.
// The window is given in the variable of g.
double norm_E_squared(const SpaceSpec& space, const GridFunction& g, Window w = {});

}  // namespace interp
