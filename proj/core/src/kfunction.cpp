// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#include "interp/kfunction.hpp"

#include <algorithm>
#include <cmath>

#include "interp/error.hpp"

namespace interp {

std::string to_string(KMethod m) {
  switch (m) {
    case KMethod::BruteForce: return "brute_force";
    case KMethod::Resolvent: return "resolvent";
    case KMethod::Rearrangement: return "rearrangement";
    case KMethod::Candidates: return "candidates";
  }
  return "candidates";
}

namespace {

// Running minimum of N0(x - v) + t N1(v); ties go to the smaller N1.
class KSearch {
 public:
  KSearch(const InterpolationCouple& c, const Vector& x, double t) : c_(c), x_(x), t_(t) {}

  double cost(const Vector& v, double* n1_out = nullptr) const {
    const double n1 = c_.n1(v);
    if (n1_out) *n1_out = n1;
    if (std::isinf(n1)) return kInf;
    const double n0 = c_.n0(x_ - v);
    return n0 + t_ * n1;
  }

  double consider(const Vector& v) {
    double n1;
    const double val = cost(v, &n1);
    if (best_.minimizer.size() == 0 || val < best_.value || (val == best_.value && n1 < best_.n1))
      best_ = {val, v, n1};
    return val;
  }

  void standard_candidates() {
    consider(x_);
    consider(Vector::Zero(x_.size()));
    if (c_.zero_point) consider(*c_.zero_point);
  }

  void refine() {
    if (!std::isfinite(best_.value)) return;
    const Vector start = best_.minimizer;
    golden(start, x_);
    golden(start, Vector::Zero(x_.size()));
  }

  void brute_force() {
    const Eigen::Index d = x_.size();
    if (d > 3) throw ParameterError("brute-force K needs dimension <= 3");
    const int m = d == 1 ? 2001 : (d == 2 ? 201 : 41);
    const Vector centre = 0.5 * x_;
    const double R = std::max(x_.cwiseAbs().maxCoeff(), 1e-12);
    Vector v(d);
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    while (true) {
      for (Eigen::Index k = 0; k < d; ++k)
        v[k] = centre[k] + R * (2.0 * idx[static_cast<std::size_t>(k)] / (m - 1) - 1.0);
      consider(v);
      Eigen::Index k = 0;
      while (k < d && ++idx[static_cast<std::size_t>(k)] == m) idx[static_cast<std::size_t>(k++)] = 0;
      if (k == d) break;
    }
    // Pattern search from the best grid point.
    double step = 2.0 * R / (m - 1);
    while (step > 1e-13 * R) {
      bool moved = false;
      for (Eigen::Index k = 0; k < d; ++k) {
        for (double s : {step, -step}) {
          Vector trial = best_.minimizer;
          trial[k] += s;
          const double before = best_.value;
          consider(trial);
          if (best_.value < before) moved = true;
        }
      }
      if (!moved) step *= 0.5;
    }
  }

  const KValue& best() const { return best_; }

 private:
  void golden(const Vector& a, const Vector& b) {
    if ((a - b).cwiseAbs().maxCoeff() == 0.0) return;
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    auto at = [&](double s) { return Vector(a + s * (b - a)); };
    double lo = 0.0, hi = 1.0;
    double s1 = hi - g * (hi - lo), s2 = lo + g * (hi - lo);
    double f1 = consider(at(s1)), f2 = consider(at(s2));
    for (int it = 0; it < 30; ++it) {
      if (f1 <= f2) {
        hi = s2;
        s2 = s1;
        f2 = f1;
        s1 = hi - g * (hi - lo);
        f1 = consider(at(s1));
      } else {
        lo = s1;
        s1 = s2;
        f1 = f2;
        s2 = lo + g * (hi - lo);
        f2 = consider(at(s2));
      }
    }
  }

  const InterpolationCouple& c_;
  const Vector& x_;
  double t_;
  KValue best_;
};

}  // namespace

KValue k_function(const InterpolationCouple& c, const Vector& x, double t, const KOptions& opt) {
  if (!(t > 0.0)) throw ParameterError("K(x, t) needs t > 0");
  c.space.require_dim(x);
  KSearch s(c, x, t);
  s.standard_candidates();
  if (c.candidates)
    for (const Vector& v : c.candidates(x, t)) s.consider(v);
  if (opt.brute_force) s.brute_force();
  if (opt.refine) s.refine();
  return s.best();
}

KProfile k_profile(const InterpolationCouple& c, const Vector& x, const LogGrid& grid,
                   const KOptions& opt) {
  c.space.require_dim(x);
  const std::size_t n = grid.size();
  std::vector<double> K(n);
  KMethod method = KMethod::Candidates;
  if (c.closed_form) {
    method = KMethod::Rearrangement;
    for (std::size_t i = 0; i < n; ++i) K[i] = c.closed_form(x, grid.node(i));
  } else if (c.op) {
    method = opt.brute_force ? KMethod::BruteForce : KMethod::Resolvent;
    const std::vector<double> lambdas(grid.nodes().begin(), grid.nodes().end());
    const std::vector<Vector> curve = resolvent_curve(*c.op, x, lambdas);
    const auto oct = static_cast<long>(std::max(1.0, std::round(std::log(2.0) / std::log(grid.ratio()))));
    for (std::size_t i = 0; i < n; ++i) {
      KSearch s(c, x, grid.node(i));
      s.standard_candidates();
      for (long off : {0L, -oct, oct, -2 * oct, 2 * oct}) {
        const long j = static_cast<long>(i) + off;
        if (j < 0 || j >= static_cast<long>(n)) continue;
        if (curve[static_cast<std::size_t>(j)].size()) s.consider(curve[static_cast<std::size_t>(j)]);
      }
      if (opt.brute_force) s.brute_force();
      if (opt.refine) s.refine();
      K[i] = s.best().value;
    }
  } else {
    method = opt.brute_force ? KMethod::BruteForce : KMethod::Candidates;
    for (std::size_t i = 0; i < n; ++i) K[i] = k_function(c, x, grid.node(i), opt).value;
  }
  // K nondecreasing: K(t_i) <= K(t_{i+1}).
  for (std::size_t i = n - 1; i-- > 0;) K[i] = std::min(K[i], K[i + 1]);
  // K/t nonincreasing: K(t_i) <= (t_i/t_{i-1}) K(t_{i-1}).
  for (std::size_t i = 1; i < n; ++i)
    if (std::isfinite(K[i - 1])) K[i] = std::min(K[i], K[i - 1] * (grid.node(i) / grid.node(i - 1)));
  std::vector<double> kt(n);
  for (std::size_t i = 0; i < n; ++i) kt[i] = std::isinf(K[i]) ? kInf : K[i] / grid.node(i);
  return {c.id, x, GridFunction(grid, std::move(kt)), method};
}

double interp_function_tau(const KProfile& profile, const SpaceSpec& space, double tau) {
  if (!(tau > 0.0)) throw ParameterError("tau must be positive");
  return norm_E(space, profile.k_over_t, Window{0.0, tau});
}

double interp_function_tau(const InterpolationCouple& c, const Vector& x, const SpaceSpec& space,
                           double tau, const LogGrid& grid, const KOptions& opt) {
  if (!(tau > grid.t_min() && tau <= grid.t_max()))
    throw ParameterError("tau must lie inside the grid range");
  return interp_function_tau(k_profile(c, x, grid, opt), space, tau);
}

}  // namespace interp
