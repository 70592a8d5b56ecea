// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "harness_common.hpp"
#include "interp/error.hpp"
#include "interp/methods.hpp"

namespace interp {

using namespace detail;

namespace {

// Extends the grid twice by six decades towards 0. A convergent tail adds
// less on the second extension than on the first; a divergent one (even a
// logarithmic one) adds a comparable amount again.
bool verdict_on(const std::function<double(const LogGrid&)>& value, const LogGrid& g, double cap,
                double* base, double* ext) {
  const double v0 = value(g);
  const double v1 = value(LogGrid::with_density_of(g, g.t_min() * 1e-6, g.t_max()));
  if (base) *base = v0;
  if (ext) *ext = v1;
  if (!(v0 < cap) || !std::isfinite(v1)) return false;
  if (v1 <= 1e-300 || v1 - v0 <= 1e-12 * v1) return true;
  const double v2 = value(LogGrid::with_density_of(g, g.t_min() * 1e-12, g.t_max()));
  if (!(v2 < cap)) return false;
  return v2 - v1 <= 0.5 * (v1 - v0);
}

using Characterization = std::pair<std::string, std::function<double(const LogGrid&)>>;

double resolvent_norm(const AccretiveOperator& op, const Vector& x, const SpaceSpec& space,
                      const LogGrid& g, double upper) {
  const std::size_t m = std::isinf(upper) ? g.size() : nodes_through(g, upper);
  const auto rd = resolvent_data(op, x, head_nodes(g, m));
  return norm_on(space, g, rd.R, 0.0, upper);
}

double orbit_norm(const AccretiveOperator& op, const Vector& x, const SpaceSpec& space,
                  const LogGrid& g, double tau, std::size_t substeps) {
  const std::size_t m = nodes_through(g, tau);
  const auto t = head_nodes(g, m);
  const auto tr = evolve_on_grid(op, x, t, substeps, false);
  std::vector<double> v(m);
  for (std::size_t i = 0; i < m; ++i) v[i] = op.space().norm(x - tr.states[i + 1]) / t[i];
  return norm_on(space, g, v, 0.0, tau);
}

double variation_norm(const OperatorPtr& op, const Vector& x, const SpaceSpec& space,
                      const LogGrid& g, double upper, int levels) {
  const std::size_t m = std::isinf(upper) ? g.size() : nodes_through(g, upper);
  const auto vp = variation_profile(resolvent_curve_fn(op, x), op->space(), head_nodes(g, m),
                                    VariationSource::ResolventCurve, 1e-10, levels);
  return norm_on(space, g, vp.derivative, 0.0, upper);
}

double k_norm(const InterpolationCouple& c, const Vector& x, const SpaceSpec& space,
              const LogGrid& g, double upper, const KOptions& k) {
  return norm_E(space, k_profile(c, x, g, k).k_over_t, Window{0.0, upper});
}

}  // namespace

FinitenessIndicator finiteness_indicator(const std::function<double(const LogGrid&)>& value,
                                         const LogGrid& grid, double cap, bool check_refinement) {
  FinitenessIndicator fi;
  fi.finite = verdict_on(value, grid, cap, &fi.base, &fi.extended);
  if (check_refinement)
    fi.stable = verdict_on(value, grid.refined(), cap, nullptr, nullptr) == fi.finite;
  return fi;
}

TheoremReport check_domain_chain(OperatorPtr op, double h, const SpaceSpec& space, double tau,
                                 const std::vector<Vector>& samples, const HarnessOptions& opt) {
  const auto& A = *op;
  if (!(h > 0.0) || !(h * A.omega() < 1.0)) throw ParameterError("requires h > 0 and hω < 1");
  if (!(tau > 0.0) || !(tau * A.omega() < 1.0)) throw ParameterError("requires τω < 1");
  hardy_bound(space);
  const auto Ih = shifted_operator(op, h);
  const Vector v0 = A.resolve(h, Vector::Zero(A.space().dim()));
  const auto cA = accretive_couple(op);
  const auto cI = accretive_couple(Ih, v0);
  const auto kopt = k_options(opt, A.space().dim());
  // Finiteness only needs upper bounds.
  const KOptions kfast{};
  const int levels = std::min(opt.variation_levels, 2);
  const double inf = kInf;
  std::ostringstream inst;
  inst << A.id() << " h=" << h << " in " << space.describe();
  TheoremReport rep("domain-chain", inst.str());
  const double nan = std::nan("");
  const double cIA = std::max(1.0 + tau, h), cAI = std::max(1.0 / h, 1.0 + tau / h);

  for (std::size_t s = 0; s < samples.size(); ++s) {
    const Vector& x = samples[s];
    A.space().require_dim(x);
    const std::string tag = "sample" + std::to_string(s);
    const DomainStatus status = A.domain_status(x);
    const bool closure = status != DomainStatus::Outside;
    std::vector<Characterization> ch = {
        {"resolvent_A", [&](const LogGrid& g) { return resolvent_norm(A, x, space, g, tau); }},
        {"resolvent_I+hA", [&](const LogGrid& g) { return resolvent_norm(*Ih, x, space, g, inf); }},
        {"K_A", [&](const LogGrid& g) { return k_norm(cA, x, space, g, tau, kfast); }},
        {"K_I+hA", [&](const LogGrid& g) { return k_norm(cI, x, space, g, tau, kfast); }},
        {"K_I+hA_full", [&](const LogGrid& g) { return k_norm(cI, x, space, g, inf, kfast); }},
        {"mean_A", [&](const LogGrid& g) { return mean_method_tau(cA, x, space, tau, 0.1, g, kfast).value; }},
    };
    // Orbits and variations miss the jump from x onto the closure of the domain.
    if (closure) {
      ch.push_back({"variation_A", [&](const LogGrid& g) { return variation_norm(op, x, space, g, tau, levels); }});
      ch.push_back({"variation_I+hA", [&](const LogGrid& g) { return variation_norm(Ih, x, space, g, inf, levels); }});
      ch.push_back({"orbit_A", [&](const LogGrid& g) { return orbit_norm(A, x, space, g, tau, opt.substeps); }});
      ch.push_back({"orbit_I+hA", [&](const LogGrid& g) { return orbit_norm(*Ih, x, space, g, tau, opt.substeps); }});
    }
    int finite = 0, total = 0, unstable = 0;
    for (const auto& [name, fn] : ch) {
      const auto fi = finiteness_indicator(fn, opt.grid, opt.finiteness_cap, opt.check_refinement);
      rep.metric(tag + "." + name, fi.base);
      finite += fi.finite;
      ++total;
      unstable += !fi.stable;
      if (!fi.stable) rep.note(tag + ": " + name + " indicator changes under grid refinement");
    }
    const int disagree = std::min(finite, total - finite);
    const bool member = 2 * finite > total;
    rep.metric(tag + ".member", member ? 1.0 : 0.0);
    rep.add(tag + ".agree", nan, disagree, 0.0, 0.0, 0.0);
    rep.add(tag + ".stable", nan, unstable, 0.0, 0.0, 0.0);
    if (status == DomainStatus::InDomain)
      rep.add(tag + ".in_domain", nan, member ? 0.0 : 1.0, 0.0, 0.0, 0.0);
    if (status == DomainStatus::Outside)
      rep.add(tag + ".outside_closure", nan, member ? 1.0 : 0.0, 0.0, 0.0, 0.0);

    // Pointwise comparisons on the base grid.
    const auto pA = k_profile(cA, x, opt.grid, kopt);
    const auto pI = k_profile(cI, x, opt.grid, kfast);
    const double xn = A.space().norm(x);
    const double ax = A.set_norm(x);
    const std::size_t below = opt.grid.count_below(tau);
    double wIA = -inf, wAI = -inf, wdom = -inf;
    std::size_t iIA = 0, iAI = 0, idom = 0;
    for (std::size_t i = 0; i < below; ++i) {
      const double kA = pA.k_over_t[i], kI = pI.k_over_t[i];
      const double d1 = kI - (cIA * kA + xn), d2 = kA - (cAI * kI + xn / h);
      if (d1 > wIA) wIA = d1, iIA = i;
      if (d2 > wAI) wAI = d2, iAI = i;
      if (kA - ax > wdom) wdom = kA - ax, idom = i;
    }
    const double tol = 1e-9 * (1.0 + xn);
    if (below > 0) {
      const double tI = opt.grid.node(iIA), tA = opt.grid.node(iAI);
      rep.add(tag + ".K_I+hA<=K_A", tI, pI.k_over_t[iIA], cIA * pA.k_over_t[iIA] + xn, cIA, tol, false);
      rep.add(tag + ".K_A<=K_I+hA", tA, pA.k_over_t[iAI], cAI * pI.k_over_t[iAI] + xn / h, cAI, tol, false);
      if (status == DomainStatus::InDomain)
        rep.add(tag + ".K/t<=|Ax|", opt.grid.node(idom), pA.k_over_t[idom], ax, 1.0, tol);
    }
  }
  return rep;
}

TheoremReport check_perturbation(OperatorPtr A, const Perturbation& B, const Domination& dom,
                                 const SpaceSpec& space, double tau,
                                 const std::vector<Vector>& samples, const HarnessOptions& opt) {
  const auto AB = perturbed_operator(A, B);
  const double wA = A->omega(), wAB = AB->omega();
  if (!(tau > 0.0) || !(tau * std::max(wA, wAB) < 1.0))
    throw ParameterError("requires τ max(ω_A, ω_A+B) < 1");
  if (!(dom.a > 0.0)) throw ParameterError("domination constant a must be positive");
  hardy_bound(space);
  TheoremReport rep("perturbation", AB->id() + " in " + space.describe());
  if (dom.a >= 1.0)
    rep.withhold("domination constant a >= 1 lies outside the theorem's hypotheses");
  const LogGrid& grid = opt.grid;
  const std::size_t m = nodes_through(grid, tau), below = grid.count_below(tau);
  const auto t = head_nodes(grid, m);
  const auto cA = accretive_couple(A);
  const auto cAB = accretive_couple(AB);
  const auto kopt = k_options(opt, A->space().dim());
  const double chi = indicator_norm(space, 0.0, tau);
  const Vector zero = Vector::Zero(A->space().dim());
  double supA = 0.0, supAB = 0.0;
  {
    const auto zA = resolvent_data(*A, zero, t), zAB = resolvent_data(*AB, zero, t);
    for (std::size_t i = 0; i < m; ++i) {
      supA = std::max(supA, A->space().norm(zA.J[i]));
      supAB = std::max(supAB, A->space().norm(zAB.J[i]));
    }
  }
  const double a = dom.a;
  const double at = (a + 2.0) * (2.0 - tau * wA) / (1.0 - tau * wA);
  const double ar = a / (1.0 - a);
  const double atr = (ar + 2.0) * (2.0 - tau * wAB) / (1.0 - tau * wAB);
  rep.metric("a_tilde", at);
  if (a < 1.0) rep.metric("a_tilde_reverse", atr);
  const double nan = std::nan("");

  for (std::size_t s = 0; s < samples.size(); ++s) {
    const Vector& x = samples[s];
    const std::string tag = "sample" + std::to_string(s);
    const double xn = A->space().norm(x);
    const auto rdA = resolvent_data(*A, x, t);

    // Domination on x and along the resolvent curve.
    auto dominated = [&](const Vector& v) {
      const double bv = A->space().norm(B.map(v)), av = A->set_norm(v);
      const double rhs = a * av + dom.b(A->space().norm(v));
      return bv <= rhs + 1e-12 * (1.0 + rhs);
    };
    bool ok = dominated(x);
    for (std::size_t i = 0; ok && i < m; i += std::max<std::size_t>(1, m / 32)) ok = dominated(rdA.J[i]);
    if (!ok) rep.withhold(tag + ": |Bv| <= a|Av| + b(||v||) fails on the sample");

    const auto pA = k_profile(cA, x, grid, kopt), pAB = k_profile(cAB, x, grid, kopt);
    const double NA = interp_function_tau(pA, space, tau), NAB = interp_function_tau(pAB, space, tau);
    rep.metric(tag + ".N_A", NA);
    rep.metric(tag + ".N_A+B", NAB);

    // K^{A+B}(x,t)/t <= (a+2) ||x - J_t^A x||/t + b(||J_t^A x||).
    double worst = -kInf;
    std::size_t wi = 0;
    std::vector<double> nz(m);
    for (std::size_t i = 0; i < m; ++i) nz[i] = noise(*A, xn, t[i], rdA.R[i]);
    for (std::size_t i = 0; i < below; ++i) {
      const double rhs = (a + 2.0) * rdA.R[i] + dom.b(A->space().norm(rdA.J[i]));
      if (pAB.k_over_t[i] - rhs - nz[i] > worst) worst = pAB.k_over_t[i] - rhs - nz[i], wi = i;
    }
    if (below > 0)
      rep.add(tag + ".pointwise", t[wi], pAB.k_over_t[wi],
              (a + 2.0) * rdA.R[wi] + dom.b(A->space().norm(rdA.J[wi])), a + 2.0, nz[wi]);

    const double NZ = norm_on(space, grid, nz, 0.0, tau);
    const double bt = dom.b(xn / (1.0 - tau * wA) + supA) * chi;
    rep.add(tag + ".affine", nan, NAB, at * NA + bt, at, 1e-9 * NAB + (a + 2.0) * NZ, false);
    if (a < 1.0) {
      const double btr = 2.0 / (1.0 - a) * dom.b(xn / (1.0 - tau * wAB) + supAB) * chi;
      rep.add(tag + ".reverse", nan, NA, atr * NAB + btr, atr, 1e-9 * NA + (ar + 2.0) * NZ, false);
    }
    const auto fA = finiteness_indicator(
        [&](const LogGrid& g) { return k_norm(cA, x, space, g, tau, KOptions{}); }, grid,
        opt.finiteness_cap, opt.check_refinement);
    const auto fAB = finiteness_indicator(
        [&](const LogGrid& g) { return k_norm(cAB, x, space, g, tau, KOptions{}); }, grid,
        opt.finiteness_cap, opt.check_refinement);
    rep.add(tag + ".indicator", nan, fA.finite == fAB.finite ? 0.0 : 1.0, 0.0, 0.0, 0.0);
  }
  return rep;
}

}  // namespace interp
