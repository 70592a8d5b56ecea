// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#include "harness_common.hpp"

#include <algorithm>

#include "interp/error.hpp"

namespace interp::detail {

ResolventData resolvent_data(const AccretiveOperator& op, const Vector& x,
                             const std::vector<double>& t) {
  ResolventData d;
  d.t = t;
  d.J = resolvent_curve(op, x, t);
  const auto& sp = op.space();
  d.R.resize(t.size());
  d.AJ.resize(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (d.J[i].size() == 0) throw ParameterError("resolvent requires λω < 1 on the whole range");
    d.R[i] = sp.norm(x - d.J[i]) / t[i];
    d.AJ[i] = std::min(op.set_norm(d.J[i]), d.R[i]);
  }
  return d;
}

OrbitData orbit_data(const AccretiveOperator& op, const Vector& x, const std::vector<double>& t,
                     std::size_t substeps) {
  OrbitData o;
  if (op.exact_semigroup(t.empty() ? 1.0 : t.front(), x)) {
    o.exact = true;
    for (double s : t) o.S.push_back(*op.exact_semigroup(s, x));
    o.err.assign(t.size(), 0.0);
    return o;
  }
  auto tr = evolve_on_grid(op, x, t, substeps, true);
  o.S.assign(tr.states.begin() + 1, tr.states.end());
  o.err.assign(tr.error.begin() + 1, tr.error.end());
  o.coarse.assign(tr.coarse_states.begin() + 1, tr.coarse_states.end());
  return o;
}

KOptions k_options(const HarnessOptions& opt, Eigen::Index dim) {
  KOptions k;
  k.brute_force = opt.brute_force && dim <= 3;
  return k;
}

bool k_two_sided(const InterpolationCouple& c, const KOptions& k) {
  return k.brute_force || static_cast<bool>(c.closed_form);
}

Cumulative cumulative_integral(const std::vector<double>& t, const std::vector<double>& g) {
  const std::size_t n = t.size();
  Cumulative c;
  c.value.resize(n);
  c.error.assign(n, 0.0);
  double run = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = i ? t[i - 1] : 0.0, ga = i ? g[i - 1] : 0.0;
    run += 0.5 * (g[i] + ga) * (t[i] - a);
    c.value[i] = run;
  }
  // Coarse rule through nodes of the same parity as i, with the head [0, t_{i mod 2}].
  std::vector<double> coarse(n);
  for (std::size_t par = 0; par < 2 && par < n; ++par) {
    double acc = 0.5 * g[par] * t[par];
    coarse[par] = acc;
    for (std::size_t i = par + 2; i < n; i += 2) {
      acc += 0.5 * (g[i] + g[i - 2]) * (t[i] - t[i - 2]);
      coarse[i] = acc;
    }
  }
  for (std::size_t i = 0; i < n; ++i) c.error[i] = std::abs(c.value[i] - coarse[i]) / 3.0;
  return c;
}

std::vector<double> fd_slack(const std::vector<double>& c) {
  const std::size_t n = c.size();
  std::vector<double> s(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i ? i - 1 : 0, hi = i + 1 < n ? i + 1 : i;
    s[i] = 10.0 * std::abs(c[lo] - c[hi]);
  }
  return s;
}

double worst_ratio_of(const TheoremReport& r, const std::string& prefix) {
  double w = 0.0;
  for (const auto& row : r.rows())
    if (row.chain.rfind(prefix, 0) == 0 && row.rhs + row.slack > 0.0)
      w = std::max(w, row.lhs / (row.rhs + row.slack));
  return w;
}

}  // namespace interp::detail
