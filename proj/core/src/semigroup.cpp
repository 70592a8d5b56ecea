// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#include "interp/semigroup.hpp"

#include <algorithm>
#include <cmath>

#include "interp/error.hpp"
#include "interp/grid.hpp"

namespace interp {

std::string to_string(Scheme s) {
  return s == Scheme::ExponentialFormula ? "exponential-formula" : "implicit-euler";
}

namespace {

void require_start(const AccretiveOperator& op, const Vector& x0) {
  op.space().require_dim(x0);
  if (op.domain_status(x0) == DomainStatus::Outside)
    throw PreconditionError("initial value lies outside the closure of dom A");
}

Vector step(const AccretiveOperator& op, double dt, const Vector& u, std::size_t k) {
  try {
    return op.resolve(dt, u, &u);
  } catch (const SolverError& e) {
    throw SolverError(std::string(e.what()) + " at step " + std::to_string(k), e.residual());
  }
}

double sup_gap(const NormedSpace& sp, const std::vector<Vector>& a, const std::vector<Vector>& b) {
  double g = 0.0;
  for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k)
    g = std::max(g, sp.norm(a[k] - b[k]));
  return g;
}

std::vector<Vector> euler_through(const AccretiveOperator& op, const Vector& x0,
                                  const std::vector<double>& times, std::size_t m,
                                  double* max_dt) {
  std::vector<Vector> out;
  out.reserve(times.size() + 1);
  out.push_back(x0);
  Vector u = x0;
  double prev = 0.0;
  std::size_t k = 0;
  for (double t : times) {
    const double dt = (t - prev) / static_cast<double>(m);
    if (max_dt) *max_dt = std::max(*max_dt, dt);
    for (std::size_t j = 0; j < m; ++j) u = step(op, dt, u, k++);
    out.push_back(u);
    prev = t;
  }
  return out;
}

}  // namespace

Trajectory evolve(const AccretiveOperator& op, const Vector& x0, double t, std::size_t n,
                  std::size_t stride) {
  if (!(t > 0.0) || n == 0 || stride == 0) throw ParameterError("evolve needs t > 0 and n >= 1");
  require_start(op, x0);
  Trajectory tr;
  tr.op_id = op.id();
  tr.x0 = x0;
  tr.scheme = Scheme::ExponentialFormula;
  tr.steps = n;
  tr.max_dt = t / static_cast<double>(n);
  tr.omega = op.omega();
  tr.times.push_back(0.0);
  tr.states.push_back(x0);
  Vector u = x0;
  for (std::size_t k = 1; k <= n; ++k) {
    u = step(op, tr.max_dt, u, k);
    if (k % stride == 0 || k == n) {
      tr.times.push_back(t * static_cast<double>(k) / static_cast<double>(n));
      tr.states.push_back(u);
    }
  }
  return tr;
}

Trajectory evolve_refined(const AccretiveOperator& op, const Vector& x0, double t,
                          std::size_t n, int levels) {
  if (levels < 0) throw ParameterError("levels must be >= 0");
  Trajectory best = evolve(op, x0, t, n);
  std::vector<double> gaps;
  for (int j = 1; j <= levels; ++j) {
    const std::size_t f = std::size_t{1} << j;
    Trajectory next = evolve(op, x0, t, n * f, f);
    gaps.push_back(sup_gap(op.space(), best.states, next.states));
    best = std::move(next);
  }
  best.cauchy = std::move(gaps);
  return best;
}

Trajectory evolve_on_grid(const AccretiveOperator& op, const Vector& x0,
                          const std::vector<double>& times, std::size_t substeps,
                          bool richardson) {
  if (substeps == 0) throw ParameterError("substeps must be >= 1");
  for (std::size_t i = 0; i < times.size(); ++i)
    if (!(times[i] > (i ? times[i - 1] : 0.0)))
      throw ParameterError("evolution times must be positive and strictly increasing");
  require_start(op, x0);
  Trajectory tr;
  tr.op_id = op.id();
  tr.x0 = x0;
  tr.scheme = Scheme::ImplicitEuler;
  tr.omega = op.omega();
  tr.times.push_back(0.0);
  tr.times.insert(tr.times.end(), times.begin(), times.end());
  if (!richardson) {
    tr.states = euler_through(op, x0, times, substeps, &tr.max_dt);
    tr.steps = substeps * times.size();
    return tr;
  }
  auto coarse = euler_through(op, x0, times, substeps, nullptr);
  tr.states = euler_through(op, x0, times, 2 * substeps, &tr.max_dt);
  tr.steps = 2 * substeps * times.size();
  tr.error.resize(coarse.size());
  for (std::size_t k = 0; k < coarse.size(); ++k)
    tr.error[k] = op.space().norm(coarse[k] - tr.states[k]);
  tr.cauchy.push_back(*std::max_element(tr.error.begin(), tr.error.end()));
  tr.coarse_states = std::move(coarse);
  return tr;
}

VariationProfile variation_profile(const std::function<Vector(double)>& curve,
                                   const NormedSpace& space, const std::vector<double>& times,
                                   VariationSource source, double tol, int max_levels) {
  VariationProfile vp;
  vp.source = source;
  vp.times = times;
  const std::size_t m = times.size();
  if (m == 0) return vp;
  for (std::size_t i = 0; i < m; ++i)
    if (!(times[i] > (i ? times[i - 1] : 0.0)))
      throw ParameterError("variation times must be positive and strictly increasing");

  // pts[i] holds the curve on the current subdivision of [s_i, s_{i+1}], s = {0} U times.
  std::vector<std::vector<Vector>> pts(m);
  Vector left = curve(0.0);
  for (std::size_t i = 0; i < m; ++i) {
    Vector right = curve(times[i]);
    pts[i] = {left, right};
    left = std::move(right);
  }
  auto sums = [&] {
    std::vector<double> inc(m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j + 1 < pts[i].size(); ++j)
        inc[i] += space.norm(pts[i][j + 1] - pts[i][j]);
    return inc;
  };
  auto inc = sums();
  double total = 0.0;
  for (double v : inc) total += v;

  for (int level = 1; level <= max_levels; ++level) {
    for (std::size_t i = 0; i < m; ++i) {
      const double a = i ? times[i - 1] : 0.0, b = times[i];
      const std::size_t cells = pts[i].size() - 1;
      std::vector<Vector> finer;
      finer.reserve(2 * cells + 1);
      for (std::size_t j = 0; j < cells; ++j) {
        finer.push_back(pts[i][j]);
        const double s = a + (b - a) * (2.0 * static_cast<double>(j) + 1.0) /
                                 (2.0 * static_cast<double>(cells));
        finer.push_back(curve(s));
      }
      finer.push_back(pts[i].back());
      pts[i] = std::move(finer);
    }
    inc = sums();
    double next = 0.0;
    for (double v : inc) next += v;
    vp.levels = level;
    const bool settled = std::abs(next - total) <= tol * std::abs(next);
    total = next;
    if (settled) {
      vp.converged = true;
      break;
    }
  }
  if (max_levels == 0) vp.converged = false;

  vp.var.resize(m);
  double run = 0.0;
  for (std::size_t i = 0; i < m; ++i) vp.var[i] = run += inc[i];
  vp.derivative.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (m == 1) {
      vp.derivative[i] = vp.var[0] / times[0];
      continue;
    }
    const std::size_t lo = i == 0 ? 0 : i - 1;
    const std::size_t hi = i + 1 < m ? i + 1 : i;
    vp.derivative[i] = std::max(0.0, (vp.var[hi] - vp.var[lo]) / (times[hi] - times[lo]));
  }
  return vp;
}

std::function<Vector(double)> resolvent_curve_fn(OperatorPtr op, Vector x) {
  return [op = std::move(op), x = std::move(x)](double t) -> Vector {
    return t == 0.0 ? x : op->resolve(t, x);
  };
}

std::vector<std::pair<Vector, Vector>> graph_samples(const AccretiveOperator& op,
                                                     const std::vector<Vector>& points,
                                                     const std::vector<double>& lambdas) {
  std::vector<std::pair<Vector, Vector>> g;
  for (const auto& u : points)
    for (double l : lambdas) {
      if (!(l * op.omega() < 1.0)) continue;
      const Vector j = op.resolve(l, u);
      g.emplace_back(j, Vector((u - j) / l));
    }
  return g;
}

TheoremReport integral_solution_check(const AccretiveOperator& op, const Trajectory& traj,
                                      const std::vector<std::pair<Vector, Vector>>& graph) {
  TheoremReport rep("integral-solution", traj.op_id);
  const auto& sp = op.space();
  const std::size_t n = traj.times.size();
  // Compare at up to ~65 time points; the integrals use every state.
  const std::size_t stride = std::max<std::size_t>(1, n / 64);
  const double omega = op.omega();
  bool slow_bracket = false;
  for (std::size_t g = 0; g < graph.size(); ++g) {
    const auto& [xh, fh] = graph[g];
    const Vector mf = -fh;
    std::vector<double> d(n), psi(n), cum(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      const Vector diff = traj.states[k] - xh;
      d[k] = sp.norm(diff);
      const auto kb = kato_bracket(sp, diff, mf);
      slow_bracket = slow_bracket || !kb.monotone;
      psi[k] = kb.value + omega * d[k];
    }
    for (std::size_t k = 1; k < n; ++k)
      cum[k] = cum[k - 1] + 0.5 * (psi[k] + psi[k - 1]) * (traj.times[k] - traj.times[k - 1]);
    double worst = -kInf;
    std::size_t ws = 0, wt = 0;
    for (std::size_t s = 0; s < n; s += stride)
      for (std::size_t t = s + stride; t < n; t += stride) {
        const double v = d[t] - d[s] - (cum[t] - cum[s]);
        if (v > worst) worst = v, ws = s, wt = t;
      }
    if (wt == 0) continue;
    const double slack = 5.0 * traj.max_dt * (1.0 + sp.norm(fh));
    rep.add("pair" + std::to_string(g), traj.times[wt], d[wt], d[ws] + cum[wt] - cum[ws], 1.0,
            slack);
  }
  if (slow_bracket)
    rep.note("Kato bracket quotients were not monotone at some states; quadrature slack may dominate");
  return rep;
}

TheoremReport orbit_interpolation_check(const AccretiveOperator& op, const Vector& x0, double T,
                                        const std::vector<double>& ts, std::size_t steps) {
  TheoremReport rep("orbit", op.id());
  const auto& sp = op.space();
  const double omega = op.omega();
  const double dt = T / static_cast<double>(steps);
  const double eT = std::exp(omega * T);
  // Discrete orbits contract with (1 - dt omega)^{-k} instead of e^{omega t}.
  const double disc = std::pow(1.0 - dt * omega, -static_cast<double>(steps) - 1.0);
  const double tol = 1e-9 * (1.0 + sp.norm(x0));
  const auto orbit = evolve(op, x0, T, steps);
  for (double t : ts) {
    if (!(t * omega < 1.0)) continue;
    const Vector v = op.resolve(t, x0);
    const auto w = evolve(op, v, T, steps);
    double sup = 0.0, lip = 0.0;
    for (std::size_t k = 0; k < w.states.size(); ++k) {
      sup = std::max(sup, sp.norm(orbit.states[k] - w.states[k]));
      if (k) lip = std::max(lip, sp.norm(w.states[k] - w.states[k - 1]) / dt);
    }
    const double dist = sp.norm(x0 - v);
    const double av = std::min(op.set_norm(v), dist / t);
    rep.add("sup", t, sup, eT * dist, eT, (disc - eT) * dist + tol);
    rep.add("lip", t, lip, eT * av, eT, (disc - eT) * av + tol / dt);
    const double witness = sup + t * lip;
    rep.add("witness", t, witness, 2.0 * eT * dist, 2.0 * eT, 2.0 * (disc - eT) * dist + 2 * tol);
  }
  return rep;
}

}  // namespace interp
