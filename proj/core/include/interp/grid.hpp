// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <vector>

namespace interp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Geometrically spaced nodes t_0 < ... < t_{n-1} with trapezoidal weights.
// Cheap to copy: the node arrays are shared.
class LogGrid {
 public:
  LogGrid(double t_min, double t_max, std::size_t n_nodes);

  // [1e-6, 1e2] with 2048 nodes.
  static LogGrid standard();
  // Same node density as `base`, covering [t_min, t_max].
  static LogGrid with_density_of(const LogGrid& base, double t_min, double t_max);
  // Integer number of nodes per octave, so t -> 2t maps nodes onto nodes.
  static LogGrid dyadic(double t_min, std::size_t octaves, std::size_t nodes_per_octave);

  double t_min() const { return d_->t_min; }
  double t_max() const { return d_->t_max; }
  std::size_t size() const { return d_->nodes.size(); }
  double node(std::size_t i) const { return d_->nodes[i]; }
  double weight(std::size_t i) const { return d_->weights[i]; }
  std::span<const double> nodes() const { return d_->nodes; }
  std::span<const double> weights() const { return d_->weights; }
  // t_{i+1}/t_i.
  double ratio() const { return d_->ratio; }
  double nodes_per_decade() const;

  // Largest i with t_i <= t; returns size() if t < t_min.
  std::size_t index_at_or_below(double t) const;
  // Number of nodes strictly below t.
  std::size_t count_below(double t) const;

  LogGrid refined() const;  // twice the nodes on the same interval

  bool operator==(const LogGrid& other) const;

 private:
  struct Data {
    double t_min, t_max, ratio;
    std::vector<double> nodes, weights;
  };
  std::shared_ptr<const Data> d_;
};

// How values between nodes are interpreted.
//   Linear: piecewise linear in t (trapezoidal quadrature).
//   Step:   value at t_i held on [t_i, t_{i+1}); exact for indicators of
//           intervals whose endpoints are nodes.
enum class Sampling { Linear, Step };

// Nonnegative extended-real function on a LogGrid. Below t_min the function
// is taken to be constant, equal to its first value.
class GridFunction {
 public:
  GridFunction(LogGrid grid, std::vector<double> values,
               Sampling sampling = Sampling::Linear);

  static GridFunction from(const LogGrid& grid, const std::function<double(double)>& f,
                           Sampling sampling = Sampling::Linear);
  static GridFunction constant(const LogGrid& grid, double c);
  // chi_{(a,b)} sampled in Step mode.
  static GridFunction indicator(const LogGrid& grid, double a, double b);

  const LogGrid& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }
  Sampling sampling() const { return sampling_; }

  bool has_infinity() const;
  // Value at arbitrary t > 0 under the sampling convention; beyond t_max the
  // last value is held.
  double at(double t) const;

  GridFunction scaled(double c) const;
  GridFunction plus(const GridFunction& other) const;
  GridFunction times(const GridFunction& other) const;
  GridFunction map(const std::function<double(double t, double v)>& f) const;
  // Multiply by chi_{(a,b)}; values at nodes outside the open interval become 0.
  GridFunction restricted(double a, double b) const;

 private:
  void require_same_grid(const GridFunction& other) const;

  LogGrid grid_;
  std::vector<double> values_;
  Sampling sampling_;
};

}  // namespace interp
