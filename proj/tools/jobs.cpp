// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#include "jobs.hpp"

#include <cmath>
#include <random>

#include "interp/error.hpp"
#include "interp/harness.hpp"
#include "interp/io.hpp"
#include "interp/methods.hpp"

namespace interplab {

using namespace interp;

namespace {

HarnessOptions options(const Config& c) {
  HarnessOptions o;
  if (c.quick) o.grid = LogGrid(1e-6, 1e2, 512);
  o.seed = c.seed;
  return o;
}

io::OperatorBundle bundle(const Config& c, const std::string& fallback) {
  return io::build_operator(io::parse_operator_spec(c.op.empty() ? fallback : c.op));
}

SpaceSpec space(const Config& c, double theta) {
  if (!c.space.empty()) return io::parse_space(c.space);
  return SpaceSpec::weighted_lp(std::isnan(c.theta) ? theta : c.theta, c.p);
}

double tau(const Config& c, double fallback) { return std::isnan(c.tau) ? fallback : c.tau; }

std::vector<Vector> samples(const Config& c, const AccretiveOperator& op) {
  std::vector<Vector> out{point(c, op)};
  std::mt19937_64 rng(c.seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int s = 1; s < c.samples; ++s) {
    Vector v(op.space().dim());
    for (auto& e : v) e = u(rng);
    out.push_back(v);
  }
  return out;
}

EnergyPtr need_energy(const io::OperatorBundle& b) {
  if (!b.energy) throw ParameterError("this check needs a subgradient instance (energy or qlaplace)");
  return b.energy;
}

std::vector<Job> make_jobs() {
  std::vector<Job> j;
  j.push_back({"th41", "resolvent, K, variation and orbit chains at every node",
               [](const Config& c) {
                 const auto b = bundle(c, "scalar:a=1");
                 return check_th41(b.op, point(c, *b.op), tau(c, 1.0), options(c));
               }});
  j.push_back({"cor42", "two-sided bounds between interpolation functions on (0, tau)",
               [](const Config& c) {
                 const auto b = bundle(c, "scalar:a=1");
                 return check_cor42(b.op, point(c, *b.op), space(c, 0.5), tau(c, 1.0), options(c));
               }});
  j.push_back({"domain", "membership indicators for A and I + hA agree",
               [](const Config& c) {
                 const auto b = bundle(c, "energy:box,lo=-1,hi=1");
                 return check_domain_chain(b.op, c.h, space(c, 0.5), tau(c, 1.0), samples(c, *b.op),
                                           options(c));
               }});
  j.push_back({"holder", "orbit displacement bound and fitted Holder exponent",
               [](const Config& c) {
                 const auto b = bundle(c, "qlaplace:q=2,n=32");
                 return check_holder(b.op, point(c, *b.op), space(c, 0.25), tau(c, 1.0), c.T,
                                     options(c));
               }});
  j.push_back({"perturbation", "interpolation functions of A and A + c sin",
               [](const Config& c) {
                 const auto b = bundle(c, "scalar:a=1");
                 Domination d;
                 const double amp = std::abs(c.c);
                 if (b.op->id() == "scalar(a=1)") {
                   d.a = amp;  // |c sin v| <= c |v| = c |Av|
                 } else {
                   d.a = 0.5;
                   d.b = [amp](double r) { return amp * r; };
                 }
                 return check_perturbation(b.op, sine_perturbation(c.c), d, space(c, 0.5),
                                           tau(c, 1.0), samples(c, *b.op), options(c));
               }});
  j.push_back({"regularizing", "two-sided bound for |AS(t)x| against the interpolation function",
               [](const Config& c) {
                 const auto b = bundle(c, "energy:quadratic,c=1");
                 return check_regularizing(b.op, point(c, *b.op), space(c, 0.5), tau(c, 1.0),
                                           options(c));
               }});
  j.push_back({"thp1", "square-root energy couple against the resolvent",
               [](const Config& c) {
                 const auto b = bundle(c, "energy:quadratic,c=1");
                 return check_thp1(need_energy(b), point(c, *b.op), space(c, 0.25), tau(c, 1.0),
                                   options(c));
               }});
  j.push_back({"qlaplace", "time-derivative norm against the resolvent norm for the q-Laplace flow",
               [](const Config& c) {
                 const double theta = std::isnan(c.theta) ? 0.25 : c.theta;
                 return qlaplace_regularity_experiment(c.q, theta, c.p,
                                                       qlaplace_initial_data(c.n, c.seed), c.T,
                                                       c.n, options(c));
               }});
  j.push_back({"mean", "mean-method step curve against the K interpolation function",
               [](const Config& c) {
                 const auto b = bundle(c, "scalar:a=1");
                 const auto o = options(c);
                 KOptions k;
                 k.brute_force = b.op->space().dim() <= 3;
                 return check_mean_equivalence(accretive_couple(b.op), point(c, *b.op),
                                               space(c, 0.5), tau(c, 1.0), c.eps, o.grid, k);
               }});
  j.push_back({"full", "truncated and untruncated interpolation functions",
               [](const Config& c) {
                 const auto b = bundle(c, "scalar:a=1");
                 const Vector zero = Vector::Zero(b.op->space().dim());
                 return k_vs_full_relation(accretive_couple(b.op, zero), point(c, *b.op),
                                           space(c, 0.5), tau(c, 1.0), options(c).grid);
               }});
  return j;
}

}  // namespace

Vector point(const Config& c, const AccretiveOperator& op) {
  const auto d = op.space().dim();
  if (!c.x.empty() && c.x != "smooth" && c.x != "hat" && c.x != "rough") {
    Vector v = io::parse_vector(c.x);
    if (v.size() == 1 && d > 1) v = Vector::Constant(d, v[0]);
    op.space().require_dim(v);
    return v;
  }
  if (d == 1) return Vector::Ones(1);
  const auto data = qlaplace_initial_data(static_cast<int>(d), c.seed);
  for (const auto& datum : data)
    if (datum.family == (c.x.empty() ? "hat" : c.x)) return datum.u0;
  return data.front().u0;
}

const std::vector<Job>& jobs() {
  static const std::vector<Job> all = make_jobs();
  return all;
}

const Job* find_job(const std::string& id) {
  for (const auto& j : jobs())
    if (j.id == id) return &j;
  return nullptr;
}

}  // namespace interplab
