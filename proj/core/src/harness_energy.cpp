// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "harness_common.hpp"
#include "interp/error.hpp"

namespace interp {

using namespace detail;

namespace {

struct Thp1Norms {
  double lower, mid, upper_r, upper_e;
};

Thp1Norms thp1_norms(const InterpolationCouple& c, const OperatorPtr& op, const Energy& E,
                     const Vector& x, const SpaceSpec& space, double tau, const LogGrid& g,
                     const KOptions& k) {
  const double t2 = 2.0 * tau * tau;
  const std::size_t m = nodes_through(g, t2);
  const auto rd = resolvent_data(*op, x, head_nodes(g, m));
  std::vector<double> en(m);
  for (std::size_t i = 0; i < m; ++i) en[i] = std::sqrt(std::max(0.0, E.value(rd.J[i])) / rd.t[i]);
  Thp1Norms n;
  n.lower = norm_on(space, g, rd.R, 0.0, 0.5 * tau * tau) / std::numbers::sqrt2;
  n.mid = norm_E_squared(space, k_profile(c, x, g, k).k_over_t, Window{0.0, tau});
  n.upper_r = norm_on(space, g, rd.R, 0.0, t2);
  n.upper_e = norm_on(space, g, en, tau * tau, t2);
  return n;
}

// E-norm over (0, T) of forward difference quotients ||S(t_{i+1})x - S(t_i)x|| / (t_{i+1} - t_i).
double quotient_norm(const AccretiveOperator& op, const Vector& x, const SpaceSpec& space,
                     const LogGrid& g, double T, std::size_t substeps) {
  const std::size_t m = std::min(nodes_through(g, T) + 1, g.size());
  const auto t = head_nodes(g, m);
  const auto tr = evolve_on_grid(op, x, t, substeps, false);
  std::vector<double> q(m - 1);
  for (std::size_t i = 0; i + 1 < m; ++i)
    q[i] = op.space().norm(tr.states[i + 2] - tr.states[i + 1]) / (t[i + 1] - t[i]);
  return norm_on(space, g, q, 0.0, T);
}

double resolvent_norm_to(const AccretiveOperator& op, const Vector& x, const SpaceSpec& space,
                         const LogGrid& g, double T) {
  const auto rd = resolvent_data(op, x, head_nodes(g, nodes_through(g, T)));
  return norm_on(space, g, rd.R, 0.0, T);
}

}  // namespace

TheoremReport check_thp1(EnergyPtr energy, const Vector& x, const SpaceSpec& space, double tau,
                         const HarnessOptions& opt) {
  if (space.kind() != SpaceKind::WeightedLp || !(space.theta() < 0.5))
    throw PreconditionError("θ < 1/2 required for the squared space");
  if (!(tau > 0.0)) throw ParameterError("tau must be positive");
  const LogGrid& grid = opt.grid;
  if (!(2.0 * tau * tau <= grid.t_max())) throw ParameterError("2 tau^2 exceeds the grid");
  energy->space().require_dim(x);
  const auto op = subgradient_operator(energy);
  const auto c = sqrt_energy_couple(energy);
  const auto k = k_options(opt, energy->space().dim());
  const bool two_sided = k_two_sided(c, k);
  const double gamma = std::numbers::sqrt2 * dilation_norm(space);
  std::ostringstream inst;
  inst << energy->id() << " in " << space.describe() << " tau=" << tau;
  TheoremReport rep("thp1", inst.str());
  rep.metric("gamma", gamma);
  if (!(gamma < 1.0)) {
    rep.withhold("gamma >= 1");
    return rep;
  }
  const auto a = thp1_norms(c, op, *energy, x, space, tau, grid, k);
  const auto b = thp1_norms(c, op, *energy, x, space, tau, grid.refined(), k);
  auto sl = [](double u, double v) { return 10.0 * std::abs(u - v) + 1e-12 * std::abs(u); };
  const double up = a.upper_r / (1.0 - gamma) + gamma / (1.0 - gamma) * a.upper_e;
  const double up_b = b.upper_r / (1.0 - gamma) + gamma / (1.0 - gamma) * b.upper_e;
  const double nan = std::nan("");
  rep.metric("N_tau_E2", a.mid);
  rep.add("p1.lower", nan, a.lower, a.mid, 1.0 / std::numbers::sqrt2,
          sl(a.lower, b.lower) + sl(a.mid, b.mid), two_sided);
  rep.add("p1.upper", nan, a.mid, up, 1.0 / (1.0 - gamma), sl(a.mid, b.mid) + sl(up, up_b));
  if (!two_sided) rep.note("K is an upper bound here, so the lower row is not certified");

  // ||x - J_t x|| <= K(x, sqrt(2t)).
  const double xn = energy->space().norm(x);
  const std::size_t m = grid.count_below(tau * tau / 2.0);
  const std::size_t stride = std::max<std::size_t>(1, m / 40);
  double worst = -kInf;
  std::size_t wi = 0;
  double wl = 0.0, wr = 0.0, ws = 0.0;
  for (std::size_t i = 0; i < m; i += stride) {
    const double t = grid.node(i);
    const Vector J = op->resolve(t, x);
    const double lhs = energy->space().norm(x - J);
    const double rhs = k_function(c, x, std::sqrt(2.0 * t), k).value;
    const double s = 64.0 * kEps * (lhs + xn) + 10.0 * op->resolve_tolerance() * t * (1.0 + xn);
    if (lhs - rhs - s > worst) worst = lhs - rhs - s, wi = i, wl = lhs, wr = rhs, ws = s;
  }
  if (m > 0) rep.add("pointwise", grid.node(wi), wl, wr, 1.0, ws, two_sided);
  return rep;
}

ExponentMap qlaplace_exponents(double q, double theta, double p) {
  if (!(q >= 2.0) || !(theta > 0.0 && theta < 1.0) || !(p >= 1.0))
    throw ParameterError("requires q >= 2, θ ∈ (0,1), p >= 1");
  const double d = 1.0 + theta * (q - 2.0);
  return {q * theta / d, p * d};
}

std::vector<InitialDatum> qlaplace_initial_data(int n, std::uint64_t seed) {
  if (n < 1) throw ParameterError("need at least one interior node");
  const double h = 1.0 / (n + 1.0);
  std::vector<InitialDatum> out(3);
  out[0].family = "smooth";
  out[1].family = "hat";
  out[2].family = "rough";
  for (auto& d : out) d.u0.resize(n);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < n; ++i) {
    const double x = (i + 1) * h;
    out[0].u0[i] = std::sin(std::numbers::pi * x);
    out[1].u0[i] = 1.0 - std::abs(2.0 * x - 1.0);
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    out[2].u0[i] = 0.2 * std::sin(0.5 * n * std::numbers::pi * x) + 0.1 * (u - 0.5);
  }
  return out;
}

TheoremReport qlaplace_regularity_experiment(double q, double theta, double p,
                                             const std::vector<InitialDatum>& data, double T,
                                             int n_interior, const HarnessOptions& opt) {
  if (!(theta > 0.0 && theta < 0.5)) throw ParameterError("requires θ ∈ (0, 1/2)");
  if (!(p > 1.0)) throw ParameterError("requires p > 1");
  if (!(T > 0.0) || !(T <= opt.grid.t_max())) throw ParameterError("T must lie in the grid");
  const auto em = qlaplace_exponents(q, theta, p);
  const auto op = qlaplace_operator(n_interior, q);
  const SpaceSpec space = SpaceSpec::weighted_lp(theta, p);
  const double P = hardy_bound(space);
  std::ostringstream inst;
  inst << op->id() << " in " << space.describe() << " T=" << T;
  TheoremReport rep("qlaplace", inst.str());
  rep.metric("alpha", em.alpha);
  rep.metric("r", em.r);
  const LogGrid& grid = opt.grid;
  const double nan = std::nan("");
  const std::size_t sub = std::max<std::size_t>(1, opt.substeps);

  for (const auto& d : data) {
    op->space().require_dim(d.u0);
    const std::string tag = d.family;
    const double W = quotient_norm(*op, d.u0, space, grid, T, sub);
    const double W2 = quotient_norm(*op, d.u0, space, grid, T, 2 * sub);
    const double R = resolvent_norm_to(*op, d.u0, space, grid, T);
    const auto fW = finiteness_indicator(
        [&](const LogGrid& g) { return quotient_norm(*op, d.u0, space, g, T, sub); }, grid,
        opt.finiteness_cap, opt.check_refinement);
    const auto fR = finiteness_indicator(
        [&](const LogGrid& g) { return resolvent_norm_to(*op, d.u0, space, g, T); }, grid,
        opt.finiteness_cap, opt.check_refinement);
    rep.metric(tag + ".time_derivative_norm", W);
    rep.metric(tag + ".resolvent_norm", R);
    rep.metric(tag + ".ratio", W / R);
    rep.add(tag + ".indicator", nan, fW.finite == fR.finite ? 0.0 : 1.0, 0.0, 0.0, 0.0);
    if (!fW.stable || !fR.stable)
      rep.note(tag + ": finiteness verdict changes under grid refinement");
    if (!fW.finite || !fR.finite)
      rep.note(tag + ": an indicator reads infinite; the flow may be under-resolved at the stiff end");
    const double s = 10.0 * std::abs(W - W2) + 10.0 * (grid.ratio() - 1.0) * W;
    const double nz = 1e-9 * R;
    rep.add(tag + ".upper", nan, W, 2.0 * R, 2.0, s + nz);
    rep.add(tag + ".lower", nan, R / (2.0 * (P + 1.0)), W, 1.0 / (2.0 * (P + 1.0)), s + nz);
  }
  return rep;
}

}  // namespace interp
