// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <string>

namespace interp {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

enum class NormKind { Euclidean, Max, WeightedL2, DiscreteL1 };

// Finite-dimensional normed space. WeightedL2 and DiscreteL1 carry cell
// weights (e.g. h for a uniform partition of (0,1)); DiscreteLinf over a
// partition is just Max.
class NormedSpace {
 public:
  static NormedSpace euclidean(Eigen::Index dim);
  static NormedSpace max_norm(Eigen::Index dim);
  static NormedSpace weighted_l2(Vector weights);
  static NormedSpace discrete_l1(Vector cell_widths);

  NormKind kind() const { return kind_; }
  Eigen::Index dim() const { return dim_; }
  const Vector& weights() const { return weights_; }
  bool is_hilbert() const { return kind_ == NormKind::Euclidean || kind_ == NormKind::WeightedL2; }

  double norm(const Vector& v) const;
  // Only for Hilbert kinds.
  double inner(const Vector& u, const Vector& v) const;
  void require_dim(const Vector& v) const;
  std::string describe() const;

 private:
  NormedSpace(NormKind k, Eigen::Index dim, Vector w) : kind_(k), dim_(dim), weights_(std::move(w)) {}
  NormKind kind_;
  Eigen::Index dim_;
  Vector weights_;
};

}  // namespace interp
