// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>

#include "harness_common.hpp"
#include "interp/error.hpp"
#include "interp/methods.hpp"

namespace interp {

using namespace detail;

namespace {

void require_tau(const AccretiveOperator& op, double tau) {
  if (!(tau > 0.0)) throw ParameterError("tau must be positive");
  if (!(tau * op.omega() < 1.0)) throw ParameterError("requires τω < 1 (resolvent range)");
}

void require_closure(const AccretiveOperator& op, const Vector& x) {
  op.space().require_dim(x);
  if (op.domain_status(x) == DomainStatus::Outside)
    throw PreconditionError("x must lie in the closure of dom A");
}

// Everything the pointwise and norm-level chains share.
struct ChainData {
  std::size_t m = 0;   // nodes through tau
  std::size_t below = 0;  // nodes strictly below tau
  std::vector<double> t;
  ResolventData rd;
  std::optional<InterpolationCouple> couple;
  KOptions kopt;
  bool two_sided = false;
  std::optional<KProfile> profile;
  VariationProfile vp;
  OrbitData od;
  std::vector<double> orbit_gap;  // ||x - S(t)x||
  Cumulative integral;            // of orbit_gap
  Cumulative integral_err;        // of the orbit error estimate
};

ChainData collect(const OperatorPtr& op, const Vector& x, double tau, const HarnessOptions& opt) {
  const auto& A = *op;
  require_tau(A, tau);
  require_closure(A, x);
  ChainData d;
  const LogGrid& grid = opt.grid;
  if (!(tau > grid.t_min())) throw ParameterError("tau must exceed the smallest grid node");
  d.m = nodes_through(grid, tau);
  d.below = grid.count_below(tau);
  d.t = head_nodes(grid, d.m);
  d.rd = resolvent_data(A, x, d.t);
  d.couple = accretive_couple(op);
  d.kopt = k_options(opt, x.size());
  d.two_sided = k_two_sided(*d.couple, d.kopt);
  d.profile = k_profile(*d.couple, x, grid, d.kopt);
  d.vp = variation_profile(resolvent_curve_fn(op, x), A.space(), d.t,
                           VariationSource::ResolventCurve, 1e-10, opt.variation_levels);
  d.od = orbit_data(A, x, d.t, opt.substeps);
  d.orbit_gap.resize(d.m);
  for (std::size_t i = 0; i < d.m; ++i) d.orbit_gap[i] = A.space().norm(x - d.od.S[i]);
  d.integral = cumulative_integral(d.t, d.orbit_gap);
  d.integral_err = cumulative_integral(d.t, d.od.err);
  return d;
}

void describe(TheoremReport& rep, const ChainData& d) {
  rep.metric("nodes", static_cast<double>(d.below));
  rep.metric("variation_levels", d.vp.levels);
  rep.note("K method: " + to_string(d.profile->method) +
           (d.two_sided ? " (two-sided)" : " (upper bound only)"));
  rep.note(d.od.exact ? "orbit: exact" : "orbit: implicit Euler with Richardson estimate");
  if (!d.vp.converged) rep.note("variation refinement hit its level cap before settling");
}

}  // namespace

TheoremReport check_th41(OperatorPtr op, const Vector& x, double tau, const HarnessOptions& opt) {
  const auto d = collect(op, x, tau, opt);
  const auto& A = *op;
  const double w = A.omega();
  const double xn = A.space().norm(x);
  TheoremReport rep("th41", A.id());
  describe(rep, d);
  const auto fds = fd_slack(d.rd.R);
  for (std::size_t i = 0; i < d.below; ++i) {
    const double t = d.t[i], tw = t * w;
    const double R = d.rd.R[i];
    const double Kt = d.profile->k_over_t[i];
    const double nz = noise(A, xn, t, R);
    const double c1 = (2.0 - tw) / (1.0 - tw);
    rep.add("i.lower", t, 0.5 * Kt, R, 0.5, nz);
    rep.add("i.upper", t, R, c1 * Kt, c1, nz, d.two_sided);

    rep.add("ii.lower", t, (1.0 - tw) * d.vp.derivative[i], R, 1.0 - tw, fds[i] + nz);
    rep.add("ii.upper", t, R, d.vp.var[i] / t, 1.0, nz);

    const double gap = d.orbit_gap[i] / t;
    const double c3 = 1.0 + std::exp(tw);
    const double s3 = 10.0 * d.od.err[i] / t + noise(A, xn, t, gap);
    rep.add("iii", t, gap, c3 * Kt, c3, s3, d.two_sided);

    const double c4 = (3.0 - tw + std::exp(tw)) / (1.0 - tw);
    const double mean_gap = d.integral.value[i] / t;
    const double s4 = c4 * 10.0 * (d.integral.error[i] + d.integral_err.value[i]) / t + nz * t;
    rep.add("iv", t, R * t, c4 * mean_gap, c4, s4);
  }
  for (const char* c : {"i.lower", "i.upper", "ii.lower", "ii.upper", "iii", "iv"})
    rep.metric(std::string("worst_ratio.") + c, worst_ratio_of(rep, c));
  return rep;
}

TheoremReport check_cor42(OperatorPtr op, const Vector& x, const SpaceSpec& space, double tau,
                          const HarnessOptions& opt) {
  const double P = hardy_bound(space);
  const auto d = collect(op, x, tau, opt);
  const auto& A = *op;
  const LogGrid& grid = opt.grid;
  const double w = A.omega(), tw = tau * w;
  const double xn = A.space().norm(x);
  TheoremReport rep("cor42", A.id() + " in " + space.describe());
  describe(rep, d);
  const auto norm = [&](const std::vector<double>& v) { return norm_on(space, grid, v, 0.0, tau); };

  std::vector<double> nz(d.m), sorbit(d.m), gap(d.m), deriv(d.m), fdd(d.m);
  for (std::size_t i = 0; i < d.m; ++i) {
    const double t = d.t[i];
    nz[i] = noise(A, xn, t, d.rd.R[i]);
    gap[i] = d.orbit_gap[i] / t;
    sorbit[i] = 10.0 * d.od.err[i] / t + noise(A, xn, t, gap[i]);
    const std::size_t lo = i ? i - 1 : 0, hi = i + 1 < d.m ? i + 1 : i;
    deriv[i] = A.space().norm(d.rd.J[hi] - d.rd.J[lo]) / (d.t[hi] - d.t[lo]);
  }
  const auto fds = fd_slack(d.rd.R);
  for (std::size_t i = 0; i < d.m; ++i) fdd[i] = fds[i] / (1.0 - d.t[i] * w);

  const double N = interp_function_tau(*d.profile, space, tau);
  const double Rn = norm(d.rd.R), Dn = norm(d.vp.derivative), Sn = norm(gap);
  const double AJn = norm(d.rd.AJ), Wn = norm(deriv);
  const double NZ = norm(nz), FD = norm(fds), SS = norm(sorbit), FDD = norm(fdd);
  const double nan = std::nan("");
  const double c = (2.0 - tw) / (1.0 - tw);

  rep.metric("hardy_bound", P);
  rep.metric("N_tau", N);
  rep.metric("resolvent_norm", Rn);
  rep.metric("variation_derivative_norm", Dn);
  rep.metric("orbit_norm", Sn);

  rep.add("a.lower", nan, 0.5 * N, Rn, 0.5, NZ);
  rep.add("a.upper", nan, Rn, c * N, c, NZ, d.two_sided);

  rep.add("b.lower", nan, (1.0 - tw) * Dn, Rn, 1.0 - tw, FD + NZ);
  rep.add("b.upper", nan, Rn, P * Dn, P, P * FD + NZ);

  const double cl = (1.0 / (2.0 * P)) * (1.0 - tw) / (3.0 + std::exp(tw));
  rep.add("c.lower", nan, cl * N, Sn, cl, SS);
  rep.add("c.upper", nan, Sn, (1.0 + std::exp(tw)) * N, 1.0 + std::exp(tw), SS, d.two_sided);

  // N^C is bounded above along the resolvent curve; N^{L0} above by the mean method.
  const double eps = 0.1;
  const auto mean = mean_method_tau(*d.couple, x, space, tau, eps, grid, d.kopt);
  const double nc_up = Rn + AJn;
  rep.metric("mean_method", mean.value);
  rep.metric("curve_objective", nc_up);
  rep.add("d.lower", nan, 0.5 * nc_up, Rn, 0.5, NZ);
  rep.add("d.upper", nan, Rn, c * mean.value, c, NZ, false);
  const double wit = norm_E(space, embedding_witness(grid));
  rep.add("d.sandwich.upper", nan, mean.value, 2.0 * (1.0 + eps) * (N + eps * wit),
          2.0 * (1.0 + eps), 1e-9 * mean.value, d.two_sided);

  const double trace = Wn + AJn;
  rep.metric("trace_objective", trace);
  rep.add("e", nan, trace, 2.0 / (1.0 - tw) * Rn, 2.0 / (1.0 - tw), FDD + 2.0 * NZ);
  rep.add("e.mean_vs_trace", nan, nc_up, P * trace, P, P * FDD + NZ);
  return rep;
}

TheoremReport check_holder(OperatorPtr op, const Vector& x, const SpaceSpec& space, double tau,
                           double T, const HarnessOptions& opt) {
  const auto& A = *op;
  require_tau(A, tau);
  require_closure(A, x);
  if (!(T > 0.0)) throw ParameterError("T must be positive");
  const LogGrid& grid = opt.grid;
  const double w = A.omega();
  const double xn = A.space().norm(x);
  TheoremReport rep("holder", A.id() + " in " + space.describe());

  const auto couple = accretive_couple(op);
  const auto kopt = k_options(opt, x.size());
  const double N = interp_function_tau(k_profile(couple, x, grid, kopt), space, tau);
  rep.metric("N_tau", N);

  const std::size_t below = grid.count_below(tau);
  if (below < 2) throw ParameterError("tau leaves fewer than two grid nodes");
  std::vector<double> hs;
  const std::size_t want = 24;
  for (std::size_t k = 0; k < want; ++k) {
    const std::size_t i = k * (below - 1) / (want - 1);
    if (hs.empty() || grid.node(i) != hs.back()) hs.push_back(grid.node(i));
  }
  const std::vector<double> ts = {0.0, 0.25 * T, 0.5 * T, T};
  std::vector<double> times;
  for (double t : ts) {
    if (t > 0.0) times.push_back(t);
    for (double h : hs) times.push_back(t + h);
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  const auto od = orbit_data(A, x, times, opt.substeps);
  std::map<double, std::size_t> at;
  for (std::size_t i = 0; i < times.size(); ++i) at[times[i]] = i;
  auto state = [&](double t) -> const Vector& { return t == 0.0 ? x : od.S[at.at(t)]; };
  auto err = [&](double t) { return t == 0.0 ? 0.0 : od.err[at.at(t)]; };

  const double c = std::exp(w * T) * (1.0 + std::exp(w * tau));
  for (double t : ts)
    for (double h : hs) {
      const double lhs = A.space().norm(state(t + h) - state(t));
      const double rhs = c * N * h / indicator_norm(space, 0.0, h);
      const double slack = 10.0 * (err(t + h) + err(t)) + 64.0 * kEps * xn +
                           10.0 * A.resolve_tolerance() * (1.0 + xn) * h;
      rep.add("displacement", t + h, lhs, rhs, c, slack, false);
    }

  // Least-squares slope of log ||S(h)x - x|| against log h.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (double h : hs) {
    const double g = A.space().norm(state(h) - x);
    if (!(g > 0.0)) continue;
    const double lx = std::log(h), ly = std::log(g);
    sx += lx, sy += ly, sxx += lx * lx, sxy += lx * ly, ++n;
  }
  if (n >= 2) {
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    rep.metric("fitted_exponent", slope);
    if (space.kind() == SpaceKind::WeightedLp)
      rep.add("exponent", std::nan(""), space.theta() - 0.05, slope, 1.0, 0.0);
  } else {
    rep.note("orbit is constant on the sampled range; no exponent fitted");
  }
  return rep;
}

LinearRegularizing linear_regularizing_constant(const Matrix& M, int log2_n) {
  if (M.rows() != M.cols() || M.rows() == 0) throw StructuralError("square matrix expected");
  if (log2_n < 1 || log2_n > 30) throw ParameterError("log2_n must lie in [1, 30]");
  const double n = std::ldexp(1.0, log2_n);
  const Matrix I = Matrix::Identity(M.rows(), M.cols());
  auto f = [&](double t) {
    Matrix R = (I + (t / n) * M).partialPivLu().inverse();
    for (int k = 0; k < log2_n; ++k) R = R * R;
    const Matrix G = t * M * R;
    return Eigen::JacobiSVD<Matrix>(G).singularValues()(0);
  };
  const auto sv = Eigen::JacobiSVD<Matrix>(M).singularValues();
  const double smax = sv(0);
  double smin = smax;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-12 * smax) smin = sv(i);
  if (!(smax > 0.0)) return {0.0, 0.0};
  const double lo = std::log(1e-2 / smax), hi = std::log(1e2 / smin);
  const int scan = 400;
  double best = -1.0, best_s = lo;
  for (int k = 0; k <= scan; ++k) {
    const double s = lo + (hi - lo) * k / scan;
    const double v = f(std::exp(s));
    if (v > best) best = v, best_s = s;
  }
  const double step = (hi - lo) / scan;
  double a = best_s - step, b = best_s + step;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double s1 = b - g * (b - a), s2 = a + g * (b - a);
  double f1 = f(std::exp(s1)), f2 = f(std::exp(s2));
  for (int it = 0; it < 80; ++it) {
    if (f1 >= f2) {
      b = s2, s2 = s1, f2 = f1, s1 = b - g * (b - a), f1 = f(std::exp(s1));
    } else {
      a = s1, s1 = s2, f1 = f2, s2 = a + g * (b - a), f2 = f(std::exp(s2));
    }
  }
  if (f1 > best) best = f1, best_s = s1;
  if (f2 > best) best = f2, best_s = s2;
  return {best, std::exp(best_s)};
}

TheoremReport check_regularizing(OperatorPtr op, const Vector& x, const SpaceSpec& space,
                                 double tau, const HarnessOptions& opt) {
  const auto& A = *op;
  const bool linear = !A.energy() && A.exact_semigroup(1.0, x).has_value();
  if (!A.energy() && !linear)
    throw PreconditionError("regularizing check needs a subgradient or a symmetric linear operator");
  require_tau(A, tau);
  require_closure(A, x);
  const double P = hardy_bound(space);
  const LogGrid& grid = opt.grid;
  const double w = A.omega();
  const double xn = A.space().norm(x);
  TheoremReport rep("regularizing", A.id() + " in " + space.describe());

  double C = 1.0;
  if (linear) {
    if (w > 0.0) throw PreconditionError("linear regularizing check needs type omega = 0");
    Matrix M(A.space().dim(), A.space().dim());
    for (Eigen::Index j = 0; j < M.cols(); ++j) M.col(j) = *A.section(Vector::Unit(M.cols(), j));
    const auto lin = linear_regularizing_constant(M);
    rep.metric("sup_tAS", lin.sup);
    rep.metric("sup_tAS_argmax", lin.argmax);
    rep.add("linear.sup_tAS", std::nan(""), lin.sup, std::exp(-1.0), 1.0, 1e-3);
    C = std::max(lin.sup, std::exp(w * tau));
  }
  rep.metric("C", C);

  const std::size_t m = nodes_through(grid, tau), below = grid.count_below(tau);
  const auto t = head_nodes(grid, m);
  const auto couple = accretive_couple(op);
  const auto kopt = k_options(opt, x.size());
  const bool two_sided = k_two_sided(couple, kopt);
  const auto profile = k_profile(couple, x, grid, kopt);
  const auto od = orbit_data(A, x, t, opt.substeps);

  std::vector<double> as(m), as_slack(m), gap(m);
  for (std::size_t i = 0; i < m; ++i) {
    as[i] = A.set_norm(od.S[i]);
    const double coarse = od.coarse.empty() ? as[i] : A.set_norm(od.coarse[i]);
    gap[i] = A.space().norm(x - od.S[i]) / t[i];
    as_slack[i] = 10.0 * std::abs(as[i] - coarse) + noise(A, xn, t[i], as[i]);
  }
  // Without a two-sided K the computed orbit state is itself a candidate.
  std::vector<double> kt(m);
  for (std::size_t i = 0; i < m; ++i)
    kt[i] = two_sided ? profile.k_over_t[i] : std::min(profile.k_over_t[i], gap[i] + as[i]);
  for (std::size_t i = 0; i < below; ++i) {
    rep.add("pointwise.upper", t[i], as[i], C * kt[i], C, as_slack[i], two_sided);
    if (two_sided)
      rep.add("pointwise.lower", t[i], kt[i], gap[i] + as[i], 1.0,
              as_slack[i] + 10.0 * od.err[i] / t[i]);
  }
  const auto norm = [&](const std::vector<double>& v) { return norm_on(space, grid, v, 0.0, tau); };
  const double N = norm(kt);
  const double ASn = norm(as), SL = norm(as_slack);
  rep.metric("N_tau", N);
  rep.metric("AS_norm", ASn);
  const double cl = 1.0 / (std::exp(w * tau) * P + 1.0);
  rep.add("norm.lower", std::nan(""), cl * N, ASn, cl, SL);
  rep.add("norm.upper", std::nan(""), ASn, C * N, C, SL, two_sided);
  return rep;
}

}  // namespace interp
