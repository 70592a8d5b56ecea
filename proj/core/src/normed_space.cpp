// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#include "interp/normed_space.hpp"

#include <cmath>

#include "interp/error.hpp"

namespace interp {

NormedSpace NormedSpace::euclidean(Eigen::Index dim) {
  if (dim < 1) throw ParameterError("normed space dimension must be positive");
  return NormedSpace(NormKind::Euclidean, dim, Vector());
}

NormedSpace NormedSpace::max_norm(Eigen::Index dim) {
  if (dim < 1) throw ParameterError("normed space dimension must be positive");
  return NormedSpace(NormKind::Max, dim, Vector());
}

NormedSpace NormedSpace::weighted_l2(Vector weights) {
  if (weights.size() < 1 || (weights.array() <= 0.0).any())
    throw ParameterError("weighted L2 needs positive weights");
  const Eigen::Index n = weights.size();
  return NormedSpace(NormKind::WeightedL2, n, std::move(weights));
}

NormedSpace NormedSpace::discrete_l1(Vector cell_widths) {
  if (cell_widths.size() < 1 || (cell_widths.array() <= 0.0).any())
    throw ParameterError("discrete L1 needs positive cell widths");
  const Eigen::Index n = cell_widths.size();
  return NormedSpace(NormKind::DiscreteL1, n, std::move(cell_widths));
}

void NormedSpace::require_dim(const Vector& v) const {
  if (v.size() != dim_)
    throw StructuralError("vector of dimension " + std::to_string(v.size()) +
                          " in a space of dimension " + std::to_string(dim_));
}

double NormedSpace::norm(const Vector& v) const {
  require_dim(v);
  switch (kind_) {
    case NormKind::Euclidean: return v.norm();
    case NormKind::Max: return v.size() ? v.cwiseAbs().maxCoeff() : 0.0;
    case NormKind::WeightedL2: return std::sqrt((weights_.array() * v.array().square()).sum());
    case NormKind::DiscreteL1: return (weights_.array() * v.array().abs()).sum();
  }
  return 0.0;
}

double NormedSpace::inner(const Vector& u, const Vector& v) const {
  require_dim(u);
  require_dim(v);
  switch (kind_) {
    case NormKind::Euclidean: return u.dot(v);
    case NormKind::WeightedL2: return (weights_.array() * u.array() * v.array()).sum();
    default: throw StructuralError("inner product requested on a non-Hilbert norm");
  }
}

std::string NormedSpace::describe() const {
  const std::string d = std::to_string(dim_);
  switch (kind_) {
    case NormKind::Euclidean: return "euclidean(" + d + ")";
    case NormKind::Max: return "max(" + d + ")";
    case NormKind::WeightedL2: return "weighted_l2(" + d + ")";
    case NormKind::DiscreteL1: return "discrete_l1(" + d + ")";
  }
  return d;
}

}  // namespace interp
