// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#include "interp/operators.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "interp/error.hpp"
#include "interp/grid.hpp"

namespace interp {

void AccretiveOperator::check_lambda(double lambda) const {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw ParameterError(id() + ": resolvent parameter must be a positive real");
  if (lambda * omega() >= 1.0) {
    std::ostringstream os;
    os << id() << ": resolvent requires λω < 1 (λ=" << lambda << ", ω=" << omega() << ")";
    throw ParameterError(os.str());
  }
}

Vector AccretiveOperator::resolve(double lambda, const Vector& x, const Vector* warm) const {
  check_lambda(lambda);
  space().require_dim(x);
  return do_resolve(lambda, x, warm);
}

Vector AccretiveOperator::yosida(double lambda, const Vector& x) const {
  return (x - resolve(lambda, x)) / lambda;
}

double set_norm_by_yosida(const AccretiveOperator& op, const Vector& x) {
  if (op.domain_status(x) == DomainStatus::Outside) return kInf;
  double lambda = 1.0;
  while (lambda * op.omega() >= 0.5) lambda *= 0.5;
  double prev = -1.0;
  double best = 0.0;
  Vector warm = x;
  for (int k = 0; k < 50; ++k, lambda *= 0.5) {
    const Vector j = op.resolve(lambda, x, &warm);
    warm = j;
    const double y = op.space().norm(x - j) / lambda;
    best = std::max(best, y);
    if (prev >= 0.0 && std::abs(y - prev) <= 1e-9 * (1.0 + y)) return best;
    prev = y;
  }
  return best;
}

namespace {

class MatrixOperator final : public AccretiveOperator {
 public:
  MatrixOperator(Matrix M, NormedSpace space, double omega, std::string id)
      : M_(std::move(M)), space_(std::move(space)), omega_(omega), id_(std::move(id)) {
    if (M_.rows() != space_.dim() || M_.cols() != space_.dim())
      throw StructuralError("matrix operator has the wrong shape");
    if (omega_ < 0.0) throw ParameterError("operator type omega must be >= 0");
    if (space_.kind() == NormKind::Euclidean && M_ == M_.transpose())
      eig_.emplace(M_);
  }
  const NormedSpace& space() const override { return space_; }
  double omega() const override { return omega_; }
  std::string id() const override { return id_; }
  double set_norm(const Vector& x) const override { return space_.norm(M_ * x); }
  std::optional<Vector> section(const Vector& x) const override { return Vector(M_ * x); }
  const Matrix& matrix() const { return M_; }
  std::optional<Vector> exact_semigroup(double t, const Vector& x) const override {
    if (!eig_) return std::nullopt;
    const Matrix& Q = eig_->eigenvectors();
    const Vector decay = (-t * eig_->eigenvalues().array()).exp().matrix();
    return Vector(Q * decay.asDiagonal() * (Q.transpose() * x));
  }

 protected:
  Vector do_resolve(double lambda, const Vector& x, const Vector*) const override {
    if (M_.rows() == 1) return x / (1.0 + lambda * M_(0, 0));
    const Matrix I = Matrix::Identity(M_.rows(), M_.cols());
    return (I + lambda * M_).partialPivLu().solve(x);
  }

 private:
  Matrix M_;
  NormedSpace space_;
  double omega_;
  std::string id_;
  std::optional<Eigen::SelfAdjointEigenSolver<Matrix>> eig_;
};

class SubgradientOperator final : public AccretiveOperator {
 public:
  explicit SubgradientOperator(EnergyPtr e) : e_(std::move(e)) {
    if (!e_->space().is_hilbert()) throw StructuralError("subgradients need a Hilbert norm");
  }
  const NormedSpace& space() const override { return e_->space(); }
  double omega() const override { return 0.0; }
  std::string id() const override { return "subgradient:" + e_->id(); }
  double set_norm(const Vector& x) const override {
    const auto g = e_->min_subgradient(x);
    return g ? space().norm(*g) : kInf;
  }
  DomainStatus domain_status(const Vector& x) const override {
    if (e_->min_subgradient(x)) return DomainStatus::InDomain;
    return e_->in_closure_of_domain(x) ? DomainStatus::InClosure : DomainStatus::Outside;
  }
  bool single_valued() const override { return e_->smooth(); }
  std::optional<Vector> section(const Vector& x) const override { return e_->min_subgradient(x); }
  const Energy* energy() const override { return e_.get(); }
  double resolve_tolerance() const override { return ProxOptions{}.tolerance; }

 protected:
  Vector do_resolve(double lambda, const Vector& x, const Vector* warm) const override {
    return e_->prox(lambda, x, warm).v;
  }

 private:
  EnergyPtr e_;
};

class AffineOperator final : public AccretiveOperator {
 public:
  AffineOperator(OperatorPtr A, double alpha, double beta)
      : A_(std::move(A)), alpha_(alpha), beta_(beta) {
    if (!(beta_ > 0.0)) throw ParameterError("affine combination needs beta > 0");
  }
  const NormedSpace& space() const override { return A_->space(); }
  double omega() const override { return std::max(0.0, beta_ * A_->omega() - alpha_); }
  std::string id() const override {
    std::ostringstream os;
    os << alpha_ << "I+" << beta_ << "*(" << A_->id() << ")";
    return os.str();
  }
  double set_norm(const Vector& x) const override {
    if (A_->single_valued()) {
      const auto s = A_->section(x);
      return s ? space().norm(alpha_ * x + beta_ * *s) : kInf;
    }
    return set_norm_by_yosida(*this, x);
  }
  DomainStatus domain_status(const Vector& x) const override { return A_->domain_status(x); }
  bool single_valued() const override { return A_->single_valued(); }
  double resolve_tolerance() const override { return A_->resolve_tolerance(); }
  std::optional<Vector> section(const Vector& x) const override {
    const auto s = A_->section(x);
    if (!s) return std::nullopt;
    return Vector(alpha_ * x + beta_ * *s);
  }
  // S(t) = e^{-alpha t} S_A(beta t).
  std::optional<Vector> exact_semigroup(double t, const Vector& x) const override {
    const auto s = A_->exact_semigroup(beta_ * t, x);
    if (!s) return std::nullopt;
    return Vector(std::exp(-alpha_ * t) * *s);
  }

 protected:
  // (1 + l alpha) v + l beta A v = x.
  Vector do_resolve(double lambda, const Vector& x, const Vector* warm) const override {
    const double s = 1.0 + lambda * alpha_;
    if (!(s > 0.0)) throw ParameterError(id() + ": resolvent requires 1 + λα > 0");
    return A_->resolve(lambda * beta_ / s, x / s, warm);
  }

 private:
  OperatorPtr A_;
  double alpha_, beta_;
};

class PerturbedOperator final : public AccretiveOperator {
 public:
  PerturbedOperator(OperatorPtr A, Perturbation B, double omega)
      : A_(std::move(A)), B_(std::move(B)), omega_(omega) {}
  const NormedSpace& space() const override { return A_->space(); }
  double omega() const override { return omega_; }
  std::string id() const override { return A_->id() + "+" + B_.id; }
  double resolve_tolerance() const override { return A_->resolve_tolerance() + 1e-13; }
  double set_norm(const Vector& x) const override {
    if (A_->single_valued()) {
      const auto s = A_->section(x);
      return s ? space().norm(*s + B_.map(x)) : kInf;
    }
    return set_norm_by_yosida(*this, x);
  }
  DomainStatus domain_status(const Vector& x) const override { return A_->domain_status(x); }
  bool single_valued() const override { return A_->single_valued(); }
  std::optional<Vector> section(const Vector& x) const override {
    const auto s = A_->section(x);
    if (!s) return std::nullopt;
    return Vector(*s + B_.map(x));
  }

 protected:
  Vector do_resolve(double lambda, const Vector& x, const Vector* warm) const override {
    const double wa = A_->omega();
    if (lambda * wa >= 1.0) throw ParameterError(id() + ": resolvent requires λω_A < 1");
    const double rate = lambda * B_.lipschitz / (1.0 - lambda * wa);
    if (rate >= 1.0) {
      std::ostringstream os;
      os << id() << ": splitting diverges (contraction factor " << rate << " >= 1)";
      throw SolverError(os.str(), rate);
    }
    const NormedSpace& H = space();
    const double tol = 1e-13 * (1.0 + H.norm(x));
    Vector v = warm ? *warm : x;
    Vector inner = v;
    for (int it = 0; it < 5000; ++it) {
      const Vector next = A_->resolve(lambda, x - lambda * B_.map(v), &inner);
      inner = next;
      const double step = H.norm(next - v);
      v = next;
      // a posteriori bound on the distance to the fixed point
      if (step * rate / (1.0 - rate) <= tol || step == 0.0) return v;
    }
    throw SolverError(id() + ": splitting did not converge", H.norm(v));
  }

 private:
  OperatorPtr A_;
  Perturbation B_;
  double omega_;
};

}  // namespace

OperatorPtr matrix_operator(Matrix M, NormedSpace space, double omega, std::string id) {
  return std::make_shared<MatrixOperator>(std::move(M), std::move(space), omega, std::move(id));
}

OperatorPtr scalar_operator(double a) {
  std::ostringstream os;
  os << "scalar(a=" << a << ")";
  return matrix_operator(Matrix::Constant(1, 1, a), NormedSpace::euclidean(1), std::max(0.0, -a),
                         os.str());
}

OperatorPtr subgradient_operator(EnergyPtr energy) {
  return std::make_shared<SubgradientOperator>(std::move(energy));
}

OperatorPtr qlaplace_operator(int n_interior, double q) {
  return subgradient_operator(qlaplace_energy(n_interior, q));
}

OperatorPtr affine_operator(OperatorPtr A, double alpha, double beta) {
  return std::make_shared<AffineOperator>(std::move(A), alpha, beta);
}

OperatorPtr shifted_operator(OperatorPtr A, double h) {
  if (!(h > 0.0)) throw ParameterError("I + hA needs h > 0");
  return affine_operator(std::move(A), 1.0, h);
}

OperatorPtr omega_shift(OperatorPtr A, double w) {
  if (w < 0.0) throw ParameterError("omega shift must be >= 0");
  return affine_operator(std::move(A), -w, 1.0);
}

OperatorPtr perturbed_operator(OperatorPtr A, Perturbation B, std::optional<double> omega) {
  if (B.lipschitz < 0.0) throw ParameterError("Lipschitz constant must be >= 0");
  const double w = omega.value_or(A->omega() + B.lipschitz);
  return std::make_shared<PerturbedOperator>(std::move(A), std::move(B), w);
}

Perturbation sine_perturbation(double c) {
  std::ostringstream os;
  os << c << "*sin";
  return {[c](const Vector& v) -> Vector { return c * v.array().sin().matrix(); }, std::abs(c),
          os.str()};
}

Perturbation zero_perturbation() {
  return {[](const Vector& v) -> Vector { return Vector::Zero(v.size()); }, 0.0, "0"};
}

KatoBracket kato_bracket(const NormedSpace& space, const Vector& x, const Vector& y) {
  KatoBracket out;
  const double nx = space.norm(x);
  if (nx == 0.0) {
    out.value = space.norm(y);
    return out;
  }
  const double eps = std::numeric_limits<double>::epsilon();
  for (int k = 4; k <= 40; ++k) {
    const double lambda = std::ldexp(1.0, -k);
    const Vector z = x + lambda * y;
    double q;
    if (space.is_hilbert()) {
      // Same quotient, written without the cancellation in ||z|| - ||x||.
      const double nz = space.norm(z);
      q = (2.0 * space.inner(x, y) + lambda * space.inner(y, y)) / (nz + nx);
    } else {
      q = (space.norm(z) - nx) / lambda;
    }
    if (!out.quotients.empty()) {
      const double slack = 8.0 * eps * (nx + space.norm(y)) / lambda;
      if (q > out.quotients.back() + slack) out.monotone = false;
    }
    out.quotients.push_back(q);
  }
  out.value = out.quotients.back();
  return out;
}

}  // namespace interp

namespace interp {

std::vector<Vector> resolvent_curve(const AccretiveOperator& op, const Vector& x,
                                    const std::vector<double>& lambdas) {
  std::vector<Vector> out(lambdas.size());
  Vector warm = x;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (lambdas[i] * op.omega() >= 1.0) continue;
    out[i] = op.resolve(lambdas[i], x, &warm);
    warm = out[i];
  }
  return out;
}

}  // namespace interp
