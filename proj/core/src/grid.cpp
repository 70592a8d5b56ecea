// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#include "interp/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "interp/error.hpp"

namespace interp {

namespace {

std::vector<double> trapezoid_weights(const std::vector<double>& t) {
  std::vector<double> w(t.size(), 0.0);
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    const double half = 0.5 * (t[i + 1] - t[i]);
    w[i] += half;
    w[i + 1] += half;
  }
  return w;
}

}  // namespace

LogGrid::LogGrid(double t_min, double t_max, std::size_t n_nodes) {
  if (!(t_min > 0.0) || !(t_max > t_min) || !std::isfinite(t_max))
    throw ParameterError("log grid needs 0 < t_min < t_max < inf");
  if (n_nodes < 2) throw ParameterError("log grid needs at least two nodes");
  auto d = std::make_shared<Data>();
  d->t_min = t_min;
  d->t_max = t_max;
  const double span = std::log(t_max / t_min);
  d->ratio = std::exp(span / static_cast<double>(n_nodes - 1));
  d->nodes.resize(n_nodes);
  for (std::size_t i = 0; i < n_nodes; ++i)
    d->nodes[i] = t_min * std::exp(span * static_cast<double>(i) /
                                   static_cast<double>(n_nodes - 1));
  d->nodes.front() = t_min;
  d->nodes.back() = t_max;
  d->weights = trapezoid_weights(d->nodes);
  d_ = std::move(d);
}

LogGrid LogGrid::standard() { return LogGrid(1e-6, 1e2, 2048); }

LogGrid LogGrid::with_density_of(const LogGrid& base, double t_min, double t_max) {
  const double cells = std::log(t_max / t_min) / std::log(base.ratio());
  const auto n = static_cast<std::size_t>(std::llround(std::max(1.0, cells))) + 1;
  return LogGrid(t_min, t_max, n);
}

LogGrid LogGrid::dyadic(double t_min, std::size_t octaves, std::size_t nodes_per_octave) {
  if (octaves == 0 || nodes_per_octave == 0)
    throw ParameterError("dyadic grid needs positive octave and node counts");
  const std::size_t n = octaves * nodes_per_octave + 1;
  LogGrid g(t_min, t_min * std::ldexp(1.0, static_cast<int>(octaves)), n);
  // Snap so that node i + m is exactly twice node i.
  auto d = std::make_shared<Data>(*g.d_);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t oct = i / nodes_per_octave, rem = i % nodes_per_octave;
    d->nodes[i] = std::ldexp(t_min * std::exp2(static_cast<double>(rem) /
                                               static_cast<double>(nodes_per_octave)),
                             static_cast<int>(oct));
  }
  d->weights = trapezoid_weights(d->nodes);
  g.d_ = std::move(d);
  return g;
}

double LogGrid::nodes_per_decade() const { return std::log(10.0) / std::log(ratio()); }

std::size_t LogGrid::index_at_or_below(double t) const {
  const auto& n = d_->nodes;
  auto it = std::upper_bound(n.begin(), n.end(), t);
  if (it == n.begin()) return n.size();
  return static_cast<std::size_t>(it - n.begin()) - 1;
}

std::size_t LogGrid::count_below(double t) const {
  const auto& n = d_->nodes;
  return static_cast<std::size_t>(std::lower_bound(n.begin(), n.end(), t) - n.begin());
}

LogGrid LogGrid::refined() const { return LogGrid(t_min(), t_max(), 2 * size() - 1); }

bool LogGrid::operator==(const LogGrid& other) const {
  if (d_ == other.d_) return true;
  return d_->nodes == other.d_->nodes;
}

GridFunction::GridFunction(LogGrid grid, std::vector<double> values, Sampling sampling)
    : grid_(std::move(grid)), values_(std::move(values)), sampling_(sampling) {
  if (values_.size() != grid_.size())
    throw StructuralError("grid function has " + std::to_string(values_.size()) +
                          " values for " + std::to_string(grid_.size()) + " nodes");
  for (double v : values_) {
    if (std::isnan(v)) throw StructuralError("grid function value is NaN");
    if (v < 0.0) throw StructuralError("grid function value is negative");
  }
}

GridFunction GridFunction::from(const LogGrid& grid, const std::function<double(double)>& f,
                                Sampling sampling) {
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(grid.node(i));
  return GridFunction(grid, std::move(v), sampling);
}

GridFunction GridFunction::constant(const LogGrid& grid, double c) {
  return GridFunction(grid, std::vector<double>(grid.size(), c));
}

GridFunction GridFunction::indicator(const LogGrid& grid, double a, double b) {
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double t = grid.node(i);
    v[i] = (t >= a && t < b) ? 1.0 : 0.0;
  }
  return GridFunction(grid, std::move(v), Sampling::Step);
}

bool GridFunction::has_infinity() const {
  return std::any_of(values_.begin(), values_.end(), [](double v) { return std::isinf(v); });
}

double GridFunction::at(double t) const {
  if (t <= grid_.t_min()) return values_.front();
  if (t >= grid_.t_max()) return values_.back();
  const std::size_t i = grid_.index_at_or_below(t);
  if (sampling_ == Sampling::Step) return values_[i];
  const double t0 = grid_.node(i), t1 = grid_.node(i + 1);
  const double s = (t - t0) / (t1 - t0);
  if (s == 0.0) return values_[i];
  if (std::isinf(values_[i]) || std::isinf(values_[i + 1])) return kInf;
  return (1.0 - s) * values_[i] + s * values_[i + 1];
}

GridFunction GridFunction::scaled(double c) const {
  if (c < 0.0) throw ParameterError("grid functions are nonnegative; scale must be >= 0");
  std::vector<double> v(values_);
  for (double& x : v) x = (x == 0.0 || c == 0.0) ? 0.0 : c * x;
  return GridFunction(grid_, std::move(v), sampling_);
}

void GridFunction::require_same_grid(const GridFunction& other) const {
  if (!(grid_ == other.grid_)) throw StructuralError("grid functions live on different grids");
}

GridFunction GridFunction::plus(const GridFunction& other) const {
  require_same_grid(other);
  std::vector<double> v(values_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += other.values_[i];
  const Sampling s = sampling_ == other.sampling_ ? sampling_ : Sampling::Linear;
  return GridFunction(grid_, std::move(v), s);
}

GridFunction GridFunction::times(const GridFunction& other) const {
  require_same_grid(other);
  std::vector<double> v(values_);
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = (v[i] == 0.0 || other.values_[i] == 0.0) ? 0.0 : v[i] * other.values_[i];
  const Sampling s = sampling_ == other.sampling_ ? sampling_ : Sampling::Linear;
  return GridFunction(grid_, std::move(v), s);
}

GridFunction GridFunction::map(const std::function<double(double, double)>& f) const {
  std::vector<double> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(grid_.node(i), values_[i]);
  return GridFunction(grid_, std::move(v), sampling_);
}

GridFunction GridFunction::restricted(double a, double b) const {
  return map([a, b](double t, double v) { return (t > a && t < b) ? v : 0.0; });
}

}  // namespace interp
