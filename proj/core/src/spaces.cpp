// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#include "interp/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "interp/error.hpp"

namespace interp {

SpaceSpec SpaceSpec::weighted_lp(double theta, double p) {
  if (!(theta > 0.0 && theta < 1.0)) throw ParameterError("WeightedLp needs 0 < theta < 1");
  if (!(p >= 1.0) || !std::isfinite(p)) throw ParameterError("WeightedLp needs 1 <= p < inf");
  return SpaceSpec(SpaceKind::WeightedLp, theta, p);
}
SpaceSpec SpaceSpec::l1() { return SpaceSpec(SpaceKind::L1, std::nan(""), 1.0); }
SpaceSpec SpaceSpec::linf() { return SpaceSpec(SpaceKind::Linf, std::nan(""), kInf); }
SpaceSpec SpaceSpec::l1_cap_linf() {
  return SpaceSpec(SpaceKind::L1capLinf, std::nan(""), 1.0);
}

double SpaceSpec::weight_exponent() const {
  return kind_ == SpaceKind::WeightedLp ? p_ * (1.0 - theta_) - 1.0 : 0.0;
}

std::string SpaceSpec::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case SpaceKind::WeightedLp: os << "WeightedLp(theta=" << theta_ << ",p=" << p_ << ")"; break;
    case SpaceKind::L1: os << "L1"; break;
    case SpaceKind::Linf: os << "Linf"; break;
    case SpaceKind::L1capLinf: os << "L1capLinf"; break;
  }
  return os.str();
}

namespace {

// int_a^b t^alpha dt for alpha > -1, 0 <= a <= b.
double power_integral(double a, double b, double alpha) {
  const double e = alpha + 1.0;
  if (b <= a) return 0.0;
  if (a <= 0.0) return std::pow(b, e) / e;
  return std::pow(a, e) * std::expm1(e * std::log(b / a)) / e;
}

double pow_value(double v, double p) {
  if (v == 0.0) return 0.0;
  if (std::isinf(v)) return kInf;
  return p == 1.0 ? v : std::pow(v, p);
}

// int_lo^hi f(t)^p t^alpha dt under the sampling model of f.
double integrate_power(const GridFunction& f, double p, double alpha, double lo, double hi) {
  const LogGrid& g = f.grid();
  const std::size_t n = g.size();
  const double a = std::max(lo, 0.0), b = std::min(hi, g.t_max());
  if (!(b > a)) return 0.0;
  double total = 0.0;
  const double t0 = g.node(0);
  if (a < t0) {
    const double hb = std::min(b, t0);
    const double fp = pow_value(f[0], p);
    if (fp != 0.0) total += fp * power_integral(a, hb, alpha);
  }
  auto gval = [&](std::size_t i) {
    const double fp = pow_value(f[i], p);
    return fp == 0.0 ? 0.0 : fp * std::pow(g.node(i), alpha);
  };
  std::size_t i = a < t0 ? 0 : g.index_at_or_below(a);
  for (; i + 1 < n && g.node(i) < b; ++i) {
    const double ti = g.node(i), tj = g.node(i + 1);
    const double ca = std::max(a, ti), cb = std::min(b, tj);
    if (!(cb > ca)) continue;
    if (f.sampling() == Sampling::Step) {
      const double fp = pow_value(f[i], p);
      if (fp != 0.0) total += fp * power_integral(ca, cb, alpha);
      continue;
    }
    const double gi = gval(i), gj = gval(i + 1);
    if (std::isinf(gi) || std::isinf(gj)) return kInf;
    if (ca == ti && cb == tj) {
      total += 0.5 * (tj - ti) * (gi + gj);
    } else {
      const double h = tj - ti;
      const double ga = gi + (gj - gi) * (ca - ti) / h;
      const double gb = gi + (gj - gi) * (cb - ti) / h;
      total += 0.5 * (cb - ca) * (ga + gb);
    }
  }
  return total;
}

double sup_over_window(const GridFunction& f, double lo, double hi) {
  const LogGrid& g = f.grid();
  const std::size_t n = g.size();
  const double a = std::max(lo, 0.0), b = std::min(hi, g.t_max());
  if (!(b > a)) return 0.0;
  double m = 0.0;
  if (a < g.node(0)) m = f[0];
  for (std::size_t i = 0; i < n; ++i) {
    const double ti = g.node(i);
    if (f.sampling() == Sampling::Step) {
      const double tj = i + 1 < n ? g.node(i + 1) : ti;
      if (tj > a && ti < b) m = std::max(m, f[i]);
    } else if (ti >= a && ti <= b) {
      m = std::max(m, f[i]);
    }
  }
  if (f.sampling() == Sampling::Linear) {
    if (a > g.node(0)) m = std::max(m, f.at(a));
    if (b < g.t_max()) m = std::max(m, f.at(b));
  }
  return m;
}

}  // namespace

double norm_E(const SpaceSpec& space, const GridFunction& f, Window w) {
  switch (space.kind()) {
    case SpaceKind::WeightedLp: {
      const double s = integrate_power(f, space.p(), space.weight_exponent(), w.lower, w.upper);
      if (std::isinf(s)) return kInf;
      return space.p() == 1.0 ? s : std::pow(s, 1.0 / space.p());
    }
    case SpaceKind::L1:
      return integrate_power(f, 1.0, 0.0, w.lower, w.upper);
    case SpaceKind::Linf:
      return sup_over_window(f, w.lower, w.upper);
    case SpaceKind::L1capLinf:
      return std::max(integrate_power(f, 1.0, 0.0, w.lower, w.upper),
                      sup_over_window(f, w.lower, w.upper));
  }
  return kInf;
}

double indicator_norm(const SpaceSpec& space, double a, double b) {
  if (!(b > a)) return 0.0;
  switch (space.kind()) {
    case SpaceKind::WeightedLp:
      return std::pow(power_integral(a, b, space.weight_exponent()), 1.0 / space.p());
    case SpaceKind::L1: return b - a;
    case SpaceKind::Linf: return 1.0;
    case SpaceKind::L1capLinf: return std::max(b - a, 1.0);
  }
  return kInf;
}

double tail_norm_over_t(const SpaceSpec& space, double tau) {
  switch (space.kind()) {
    case SpaceKind::WeightedLp: {
      // int_tau^inf t^{-p} t^{p(1-theta)-1} dt = tau^{-p theta}/(p theta)
      const double p = space.p(), th = space.theta();
      return std::pow(std::pow(tau, -p * th) / (p * th), 1.0 / p);
    }
    case SpaceKind::Linf: return 1.0 / tau;
    case SpaceKind::L1:
    case SpaceKind::L1capLinf: return kInf;
  }
  return kInf;
}

GridFunction embedding_witness(const LogGrid& grid) {
  return GridFunction::from(grid, [](double t) { return t <= 1.0 ? 1.0 : 1.0 / (t * t); });
}

GridFunction hardy_apply(const GridFunction& f) {
  const LogGrid& g = f.grid();
  const std::size_t n = g.size();
  std::vector<double> out(n);
  double c = f[0] * g.node(0);
  out[0] = std::isinf(c) ? kInf : c / g.node(0);
  for (std::size_t i = 1; i < n; ++i) {
    const double h = g.node(i) - g.node(i - 1);
    if (f.sampling() == Sampling::Step)
      c += h * f[i - 1];
    else
      c += 0.5 * h * (f[i - 1] + f[i]);
    out[i] = std::isinf(c) ? kInf : c / g.node(i);
  }
  return GridFunction(g, std::move(out), Sampling::Linear);
}

double hardy_bound(const SpaceSpec& space) {
  switch (space.kind()) {
    case SpaceKind::WeightedLp: return 1.0 / space.theta();
    case SpaceKind::Linf: return 1.0;
    case SpaceKind::L1:
    case SpaceKind::L1capLinf:
      throw PreconditionError("Hardy unbounded on L¹ (P maps L¹ only into weak-L¹)");
  }
  return kInf;
}

double hardy_norm_estimate(const SpaceSpec& space, int trial_count) {
  hardy_bound(space);  // rejects the unbounded kinds
  if (trial_count < 1) throw ParameterError("hardy_norm_estimate needs trial_count >= 1");
  if (space.kind() == SpaceKind::Linf) {
    const LogGrid g(1e-6, 1e2, 2049);
    const GridFunction chi = GridFunction::indicator(g, 0.0, g.node(1536));
    return norm_E(space, hardy_apply(chi)) / norm_E(space, chi);
  }
  // Wide grid so that the power singularity at 0 is mostly resolved.
  const LogGrid g(1e-40, 1e8, 48 * 128 + 1);
  const double theta = space.theta();
  double best = 0.0;
  for (int k = 0; k < trial_count; ++k) {
    const double frac = trial_count == 1 ? 0.0 : static_cast<double>(k) / (trial_count - 1);
    const double eps = 0.5 * std::pow(0.01, frac);
    const GridFunction f = GridFunction::from(
        g, [&](double t) { return t <= 1.0 ? std::pow(t, -(1.0 - theta) + eps) : 0.0; });
    const double r = norm_E(space, hardy_apply(f)) / norm_E(space, f);
    best = std::max(best, r);
  }
  return best;
}

GridFunction dilation_apply(const GridFunction& f) {
  const LogGrid& g = f.grid();
  std::vector<double> out(g.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.at(2.0 * g.node(i));
  return GridFunction(g, std::move(out), f.sampling());
}

double dilation_norm(const SpaceSpec& space) {
  if (space.kind() == SpaceKind::WeightedLp) return std::pow(2.0, -(1.0 - space.theta()));
  return 1.0;
}

SpaceSpec square_space(const SpaceSpec& space) {
  if (space.kind() != SpaceKind::WeightedLp || !(space.theta() < 0.5))
    throw PreconditionError("E² not a Banach function space (θ < 1/2 required)");
  return SpaceSpec::weighted_lp(2.0 * space.theta(), space.p());
}

double norm_E_squared(const SpaceSpec& space, const GridFunction& g, Window w) {
  // Substituting t = s^2 in the E-norm of g(sqrt t)/sqrt t gives
  // 2 int |g(s)|^p s^{p(1-2 theta)-1} ds.
  const SpaceSpec sq = square_space(space);
  return std::pow(2.0, 1.0 / space.p()) * norm_E(sq, g, w);
}

}  // namespace interp
