// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#include "interp/couple.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "interp/error.hpp"
#include "interp/grid.hpp"

namespace interp {

InterpolationCouple accretive_couple(OperatorPtr op, std::optional<Vector> zero) {
  InterpolationCouple c{"accretive:" + op->id(), op->space(), {}, {}, {}, {}, op, {}, zero, false};
  const NormedSpace space = op->space();
  c.n0 = [space](const Vector& v) { return space.norm(v); };
  c.n1 = [op](const Vector& v) { return op->set_norm(v); };
  c.candidates = [op](const Vector& x, double t) {
    std::vector<Vector> out;
    for (double f : {0.25, 0.5, 1.0, 2.0, 4.0})
      if (f * t * op->omega() < 1.0) out.push_back(op->resolve(f * t, x));
    return out;
  };
  return c;
}

InterpolationCouple scaled_euclidean_couple(Eigen::Index dim, double c) {
  if (!(c > 0.0)) throw ParameterError("scaled couple needs c > 0");
  std::ostringstream os;
  os << "euclidean(" << dim << ",c=" << c << ")";
  InterpolationCouple k{os.str(), NormedSpace::euclidean(dim), {}, {}, {}, {}, nullptr, nullptr,
                        Vector(Vector::Zero(dim)), true};
  k.n0 = [](const Vector& v) { return v.norm(); };
  k.n1 = [c](const Vector& v) { return c * v.norm(); };
  k.closed_form = [c](const Vector& x, double t) { return std::min(1.0, c * t) * x.norm(); };
  return k;
}

double rearrangement_k(const Vector& w, const Vector& f, double t) {
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(f.size()));
  std::iota(idx.begin(), idx.end(), Eigen::Index{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return std::abs(f[a]) > std::abs(f[b]); });
  double rem = t, s = 0.0;
  for (Eigen::Index j : idx) {
    if (rem <= 0.0) break;
    const double take = std::min(w[j], rem);
    s += take * std::abs(f[j]);
    rem -= take;
  }
  return s;
}

InterpolationCouple l1_linf_couple(Vector w) {
  const Eigen::Index m = w.size();
  InterpolationCouple c{"l1_linf(" + std::to_string(m) + ")", NormedSpace::discrete_l1(w), {}, {},
                        {}, {}, nullptr, nullptr, Vector(Vector::Zero(m)), true};
  c.n0 = [w](const Vector& v) { return (w.array() * v.array().abs()).sum(); };
  c.n1 = [](const Vector& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; };
  // Truncations at every level |f_j| and at 0: the optimum is among them.
  c.candidates = [](const Vector& f, double) {
    std::vector<Vector> out;
    std::vector<double> levels{0.0};
    for (Eigen::Index j = 0; j < f.size(); ++j) levels.push_back(std::abs(f[j]));
    for (double lv : levels) {
      Vector v(f.size());
      for (Eigen::Index j = 0; j < f.size(); ++j) v[j] = std::clamp(f[j], -lv, lv);
      out.push_back(std::move(v));
    }
    return out;
  };
  c.closed_form = [w](const Vector& f, double t) { return rearrangement_k(w, f, t); };
  return c;
}

InterpolationCouple powered_couple(const InterpolationCouple& base, double a0, double a1) {
  if (!(a0 > 0.0 && a0 <= 1.0 && a1 > 0.0 && a1 <= 1.0))
    throw ParameterError("powered couple needs exponents in (0, 1]");
  std::ostringstream os;
  os << "powered(" << base.id << "," << a0 << "," << a1 << ")";
  InterpolationCouple c = base;
  c.id = os.str();
  c.closed_form = nullptr;
  c.op = nullptr;
  c.norm_couple = false;
  auto n0 = base.n0, n1 = base.n1;
  c.n0 = [n0, a0](const Vector& v) { return std::pow(n0(v), a0); };
  c.n1 = [n1, a1](const Vector& v) { return std::pow(n1(v), a1); };
  return c;
}

InterpolationCouple sqrt_energy_couple(EnergyPtr energy) {
  const NormedSpace space = energy->space();
  const Vector zero = Vector::Zero(space.dim());
  std::optional<Vector> zp;
  if (energy->value(zero) == 0.0) zp = zero;
  InterpolationCouple c{"sqrt_energy:" + energy->id(), space, {}, {}, {}, {}, nullptr, energy,
                        zp, false};
  c.n0 = [space](const Vector& v) { return space.norm(v); };
  c.n1 = [energy](const Vector& v) {
    const double e = energy->value(v);
    return std::isinf(e) ? kInf : std::sqrt(std::max(0.0, e));
  };
  // The proof of the energy-couple equivalence pairs K(x, t) with J_s x at s ~ t^2.
  c.candidates = [energy](const Vector& x, double t) {
    std::vector<Vector> out;
    for (double f : {0.125, 0.25, 0.5, 1.0, 2.0}) out.push_back(energy->prox(f * t * t, x).v);
    return out;
  };
  return c;
}

}  // namespace interp
