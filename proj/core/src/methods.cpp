// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#include "interp/methods.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <string>

#include "interp/error.hpp"

namespace interp {

namespace {

// Nodes needed to integrate over (0, tau): everything up to the first node >= tau.
std::size_t nodes_through(const LogGrid& grid, double tau) {
  std::size_t k = grid.count_below(tau);
  return std::min(k + 1, grid.size());
}

double rel_slack(double v) { return 1e-10 * std::abs(v) + 1e-14; }

// Step curve of the mean method sampled on the grid nodes.
std::vector<Vector> mean_step_curve(const InterpolationCouple& c, const Vector& x, double eps,
                                    const LogGrid& grid, std::size_t m, const KOptions& opt,
                                    std::size_t* cells) {
  const double lr = std::log1p(eps);
  std::map<long, Vector> cache;
  std::vector<Vector> u(m);
  for (std::size_t i = 0; i < m; ++i) {
    const long n = static_cast<long>(std::floor(-std::log(grid.node(i)) / lr));
    auto it = cache.find(n);
    if (it == cache.end()) {
      const double tn = std::exp(-static_cast<double>(n) * lr);
      it = cache.emplace(n, k_function(c, x, tn, opt).minimizer).first;
    }
    u[i] = it->second;
  }
  if (cells) *cells = cache.size();
  return u;
}

GridFunction padded(const LogGrid& grid, std::vector<double> head) {
  head.resize(grid.size(), 0.0);
  return GridFunction(grid, std::move(head));
}

}  // namespace

MeanMethodResult mean_method_tau(const InterpolationCouple& c, const Vector& x,
                                 const SpaceSpec& space, double tau, double eps,
                                 const LogGrid& grid, const KOptions& opt) {
  if (!(eps > 0.0 && eps <= 1.0)) throw ParameterError("epsilon must lie in (0, 1]");
  if (!(tau > 0.0)) throw ParameterError("tau must be positive");
  const std::size_t m = nodes_through(grid, tau);
  MeanMethodResult r;
  const auto u = mean_step_curve(c, x, eps, grid, m, opt, &r.cells);
  std::vector<double> f0(m), f1(m);
  for (std::size_t i = 0; i < m; ++i) {
    f0[i] = c.n0(x - u[i]) / grid.node(i);
    f1[i] = c.n1(u[i]);
  }
  const Window w{0.0, tau};
  r.n0_part = norm_E(space, padded(grid, std::move(f0)), w);
  r.n1_part = norm_E(space, padded(grid, std::move(f1)), w);
  r.value = r.n0_part + r.n1_part;
  return r;
}

TheoremReport check_mean_equivalence(const InterpolationCouple& c, const Vector& x,
                                     const SpaceSpec& space, double tau, double eps,
                                     const LogGrid& grid, const KOptions& opt) {
  const auto mean = mean_method_tau(c, x, space, tau, eps, grid, opt);
  const double N = interp_function_tau(k_profile(c, x, grid, opt), space, tau);
  const double tail = norm_E(space, embedding_witness(grid));
  const double bound = 2.0 * (1.0 + eps) * (N + eps * tail);
  const bool two_sided = opt.brute_force || static_cast<bool>(c.closed_form);
  std::ostringstream inst;
  inst << c.id << " eps=" << eps << " tau=" << tau << " in " << space.describe();
  TheoremReport rep("mean", inst.str());
  rep.metric("N_tau", N);
  rep.metric("mean_value", mean.value);
  rep.metric("cells", static_cast<double>(mean.cells));
  const double nan = std::nan("");
  rep.add("N<=mean", nan, N, mean.value, 1.0, 1e-9 * mean.value + 1e-14, two_sided);
  rep.add("mean<=bound", nan, mean.value, bound, 2.0 * (1.0 + eps), rel_slack(bound));
  if (!two_sided) rep.note("K is an upper bound here, so N<=mean is not certified");
  return rep;
}

TraceResult trace_method_upper(const InterpolationCouple& c, const Vector& x,
                               const SpaceSpec& space, double tau, const LogGrid& grid) {
  if (!c.op) throw PreconditionError("trace witness needs an accretive couple");
  const auto& op = *c.op;
  const double omega = op.omega();
  if (!(tau * omega < 1.0)) throw ParameterError("trace bound requires tau*omega < 1");
  const std::size_t m = nodes_through(grid, tau);
  std::vector<double> lambdas(grid.nodes().begin(), grid.nodes().begin() + m);
  auto w = resolvent_curve(op, x, lambdas);
  for (std::size_t i = 1; i < m; ++i)
    if (w[i].size() == 0) w[i] = w[i - 1];

  const auto& sp = c.space;
  std::vector<double> deriv(m), gen(m), yos(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t lo = i == 0 ? 0 : i - 1;
    const std::size_t hi = i + 1 < m ? i + 1 : i;
    deriv[i] = hi > lo ? sp.norm(w[hi] - w[lo]) / (lambdas[hi] - lambdas[lo]) : 0.0;
    yos[i] = sp.norm(x - w[i]) / lambdas[i];
    // (x - w)/lambda lies in A w, so it caps the computed set norm.
    gen[i] = std::min(op.set_norm(w[i]), yos[i]);
  }
  const Window win{0.0, tau};
  TraceResult r;
  r.derivative_part = norm_E(space, padded(grid, std::move(deriv)), win);
  r.generator_part = norm_E(space, padded(grid, std::move(gen)), win);
  r.resolvent_norm = norm_E(space, padded(grid, std::move(yos)), win);
  r.value = r.derivative_part + r.generator_part;
  r.bound = 2.0 / (1.0 - tau * omega) * r.resolvent_norm;
  r.curve_mean_objective = r.resolvent_norm + r.generator_part;
  return r;
}

TheoremReport k_vs_full_relation(const InterpolationCouple& c, const Vector& x,
                                 const SpaceSpec& space, double tau, const LogGrid& grid) {
  if (!c.zero_point) throw PreconditionError("no v0 with N1(v0) = 0 is known for this couple");
  const Vector& v0 = *c.zero_point;
  if (c.n1(v0) != 0.0) throw PreconditionError("N1(v0) = 0 fails for the stated v0");
  const double n0v = c.n0(x - v0);
  if (!std::isfinite(n0v)) throw PreconditionError("N0 is not finite at x - v0");

  const auto profile = k_profile(c, x, grid);
  const double ntau = interp_function_tau(profile, space, tau);
  const double full = norm_E(space, profile.k_over_t);
  const double tail = n0v * tail_norm_over_t(space, tau);

  TheoremReport rep("k-full", c.id);
  rep.metric("N_tau", ntau);
  rep.metric("N", full);
  rep.metric("tail_term", tail);
  const double nan = std::nan("");
  rep.add("N_tau<=N", nan, ntau, full, 1.0, rel_slack(full));
  rep.add("N<=N_tau+tail", nan, full, ntau + tail, 1.0, rel_slack(ntau + tail), false);
  return rep;
}

TheoremReport interpolation_theorem_check(const std::function<Vector(const Vector&)>& T,
                                          const InterpolationCouple& X,
                                          const InterpolationCouple& Y, const SpaceSpec& space,
                                          double tau, const std::vector<Vector>& samples,
                                          const TransferConstants& k, const LogGrid& grid) {
  TheoremReport rep("interpolation", X.id + "->" + Y.id);
  const double a_tilde = std::max(k.L, k.a);
  rep.metric("a_tilde", a_tilde);
  const std::size_t m = nodes_through(grid, tau);
  const Window win{0.0, tau};
  const double nan = std::nan("");

  for (std::size_t s = 0; s < samples.size(); ++s) {
    const Vector& x = samples[s];
    const std::string tag = "sample" + std::to_string(s);
    std::vector<Vector> u;
    if (X.op && X.op->omega() * grid.node(m - 1) < 1.0) {
      std::vector<double> lambdas(grid.nodes().begin(), grid.nodes().begin() + m);
      u = resolvent_curve(*X.op, x, lambdas);
    } else {
      u = mean_step_curve(X, x, 0.05, grid, m, {}, nullptr);
    }
    const Vector Tx = T(x);
    std::vector<double> l0(m), l1(m), r0(m), r1(m), bb(m);
    bool hyp_ok = true;
    for (std::size_t i = 0; i < m; ++i) {
      const double t = grid.node(i);
      const Vector Tu = T(u[i]);
      const double m0 = Y.n0(Tx - Tu), n0 = X.n0(x - u[i]);
      const double m1 = Y.n1(Tu), n1 = X.n1(u[i]);
      const double b = k.b(X.space.norm(u[i]));
      if (hyp_ok && m0 > k.L * n0 + rel_slack(k.L * n0)) {
        rep.withhold(tag + ": M0(Tx - Tu) <= L N0(x - u) fails at t=" + format_number(t));
        hyp_ok = false;
      }
      if (hyp_ok && m1 > k.a * n1 + b + rel_slack(k.a * n1 + b)) {
        rep.withhold(tag + ": M1(Tu) <= a N1(u) + b(||u||) fails at t=" + format_number(t));
        hyp_ok = false;
      }
      l0[i] = m0 / t;
      l1[i] = m1;
      r0[i] = n0 / t;
      r1[i] = n1;
      bb[i] = b;
    }
    const double lhs = norm_E(space, padded(grid, l0), win) + norm_E(space, padded(grid, l1), win);
    const double x0 = norm_E(space, padded(grid, r0), win);
    const double x1 = norm_E(space, padded(grid, r1), win);
    const double b_tilde = norm_E(space, padded(grid, bb), win);
    const double rhs = k.L * x0 + k.a * x1 + b_tilde;
    rep.metric(tag + ".lhs", lhs);
    rep.metric(tag + ".objective_x", x0 + x1);
    rep.metric(tag + ".b_tilde", b_tilde);
    rep.add(tag, nan, lhs, rhs, a_tilde, rel_slack(rhs));
    rep.add(tag + "/a_tilde", nan, rhs, a_tilde * (x0 + x1) + b_tilde, a_tilde,
            rel_slack(a_tilde * (x0 + x1) + b_tilde));
  }
  return rep;
}

}  // namespace interp
