// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#include "interp/energy.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "interp/error.hpp"
#include "interp/grid.hpp"

namespace interp {

Vector Energy::gradient(const Vector&) const {
  throw StructuralError(id() + ": no gradient available for the Newton prox");
}

Vector Energy::solve_shifted_hessian(const Vector&, double, const Vector&) const {
  throw StructuralError(id() + ": no Hessian available for the Newton prox");
}

ProxResult Energy::prox(double lambda, const Vector& x, const Vector* warm,
                        const ProxOptions& opt) const {
  const NormedSpace& H = space();
  H.require_dim(x);
  if (!(lambda > 0.0)) throw ParameterError("prox needs lambda > 0");
  const double inv = 1.0 / lambda;
  const double tol = opt.tolerance * (1.0 + H.norm(x));
  auto phi = [&](const Vector& v) {
    const Vector d = v - x;
    return value(v) + 0.5 * inv * H.inner(d, d);
  };
  auto grad = [&](const Vector& v) -> Vector { return gradient(v) + inv * (v - x); };

  Vector v = warm ? *warm : x;
  Vector G = grad(v);
  double gnorm = H.norm(G);
  double f = phi(v);
  const double eps = std::numeric_limits<double>::epsilon();
  for (int it = 0; it < opt.max_iterations; ++it) {
    if (gnorm <= tol) return {v, gnorm, it};
    Vector d = solve_shifted_hessian(v, inv, G);
    double slope = H.inner(G, d);
    bool newton = std::isfinite(slope) && slope > 0.0;
    if (!newton) {
      d = lambda * G;  // gradient step at the strong-convexity scale
      slope = H.inner(G, d);
    }
    double s = 1.0;
    bool accepted = false;
    Vector trial;
    for (int ls = 0; ls < 60; ++ls) {
      trial = v - s * d;
      const double ft = phi(trial);
      if (std::isfinite(ft) && ft <= f - 1e-4 * s * slope) {
        accepted = true;
        break;
      }
      // Near the optimum phi differences drown in rounding; fall back to
      // decrease of the gradient norm.
      if (std::isfinite(ft) && H.norm(grad(trial)) < (1.0 - 0.25 * s) * gnorm) {
        accepted = true;
        break;
      }
      s *= 0.5;
    }
    const double step = s * H.norm(d);
    if (!accepted || step <= 4.0 * eps * (H.norm(v) + H.norm(x) + 1e-300)) {
      // Stagnation at rounding level.
      const Vector Gt = accepted ? grad(trial) : G;
      const double gt = H.norm(Gt);
      const double floor = 64.0 * eps * (H.norm(gradient(v)) + inv * (H.norm(v) + H.norm(x)));
      if (std::min(gt, gnorm) <= std::max(tol, floor))
        return {accepted && gt < gnorm ? trial : v, std::min(gt, gnorm), it + 1};
      throw SolverError(id() + ": prox line search stalled", std::min(gt, gnorm));
    }
    v = trial;
    f = phi(v);
    G = grad(v);
    gnorm = H.norm(G);
  }
  if (gnorm <= tol) return {v, gnorm, opt.max_iterations};
  throw SolverError(id() + ": prox did not converge", gnorm);
}

namespace {

class QuadraticEnergy final : public Energy {
 public:
  QuadraticEnergy(Matrix Q, NormedSpace space) : Q_(std::move(Q)), space_(std::move(space)) {
    if (!space_.is_hilbert()) throw StructuralError("quadratic energy needs a Hilbert norm");
    if (Q_.rows() != space_.dim() || Q_.cols() != space_.dim())
      throw StructuralError("quadratic energy matrix has the wrong shape");
    if ((Q_ - Q_.transpose()).norm() > 1e-12 * (1.0 + Q_.norm()))
      throw ParameterError("quadratic energy matrix must be symmetric");
    Eigen::SelfAdjointEigenSolver<Matrix> es(Q_);
    if (es.eigenvalues().minCoeff() < -1e-12 * (1.0 + Q_.norm()))
      throw ParameterError("quadratic energy matrix must be positive semidefinite");
    W_ = space_.kind() == NormKind::WeightedL2 ? space_.weights() : Vector::Ones(space_.dim());
  }
  const NormedSpace& space() const override { return space_; }
  std::string id() const override { return "quadratic(" + std::to_string(Q_.rows()) + ")"; }
  double value(const Vector& v) const override { return 0.5 * v.dot(Q_ * v); }
  std::optional<Vector> min_subgradient(const Vector& v) const override { return gradient(v); }
  ProxResult prox(double lambda, const Vector& x, const Vector*, const ProxOptions&) const override {
    space_.require_dim(x);
    const Matrix M = Matrix(W_.asDiagonal()) + lambda * Q_;
    const Vector v = M.ldlt().solve(W_.cwiseProduct(x));
    const Vector r = gradient(v) + (v - x) / lambda;
    return {v, space_.norm(r), 1};
  }

 protected:
  Vector gradient(const Vector& v) const override { return (Q_ * v).cwiseQuotient(W_); }
  Vector solve_shifted_hessian(const Vector&, double shift, const Vector& rhs) const override {
    const Matrix M = Q_ + shift * Matrix(W_.asDiagonal());
    return M.ldlt().solve(W_.cwiseProduct(rhs));
  }

 private:
  Matrix Q_;
  NormedSpace space_;
  Vector W_;
};

class AbsEnergy final : public Energy {
 public:
  AbsEnergy(Eigen::Index dim, double c) : space_(NormedSpace::euclidean(dim)), c_(c) {
    if (!(c > 0.0)) throw ParameterError("abs energy needs c > 0");
  }
  const NormedSpace& space() const override { return space_; }
  std::string id() const override { return "abs"; }
  bool smooth() const override { return false; }
  double value(const Vector& v) const override { return c_ * v.cwiseAbs().sum(); }
  std::optional<Vector> min_subgradient(const Vector& v) const override {
    Vector g(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) g[i] = v[i] > 0 ? c_ : (v[i] < 0 ? -c_ : 0.0);
    return g;
  }
  ProxResult prox(double lambda, const Vector& x, const Vector*, const ProxOptions&) const override {
    space_.require_dim(x);
    const double k = lambda * c_;
    Vector v(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i)
      v[i] = x[i] > k ? x[i] - k : (x[i] < -k ? x[i] + k : 0.0);
    return {v, 0.0, 0};
  }

 private:
  NormedSpace space_;
  double c_;
};

class BoxIndicator final : public Energy {
 public:
  BoxIndicator(Vector lo, Vector hi, NormedSpace space)
      : lo_(std::move(lo)), hi_(std::move(hi)), space_(std::move(space)) {
    if (!space_.is_hilbert()) throw StructuralError("box indicator needs a Hilbert norm");
    if (lo_.size() != space_.dim() || hi_.size() != space_.dim())
      throw StructuralError("box bounds have the wrong dimension");
    if ((lo_.array() > hi_.array()).any()) throw ParameterError("box needs lo <= hi");
  }
  const NormedSpace& space() const override { return space_; }
  std::string id() const override { return "box"; }
  bool smooth() const override { return false; }
  bool inside(const Vector& v) const {
    return (v.array() >= lo_.array()).all() && (v.array() <= hi_.array()).all();
  }
  double value(const Vector& v) const override { return inside(v) ? 0.0 : kInf; }
  std::optional<Vector> min_subgradient(const Vector& v) const override {
    if (!inside(v)) return std::nullopt;
    return Vector::Zero(v.size());
  }
  bool in_closure_of_domain(const Vector& v) const override { return inside(v); }
  ProxResult prox(double, const Vector& x, const Vector*, const ProxOptions&) const override {
    space_.require_dim(x);
    return {x.cwiseMax(lo_).cwiseMin(hi_), 0.0, 0};
  }

 private:
  Vector lo_, hi_;
  NormedSpace space_;
};

class QLaplaceEnergy final : public Energy {
 public:
  QLaplaceEnergy(int n, double q) : n_(n), q_(q), h_(qlaplace_h(n)), space_(qlaplace_space(n)) {
    if (n < 1) throw ParameterError("q-Laplace needs at least one interior node");
    if (!(q >= 2.0) || !std::isfinite(q)) throw ParameterError("q-Laplace needs 2 <= q < inf");
  }
  const NormedSpace& space() const override { return space_; }
  std::string id() const override {
    std::ostringstream os;
    os << "qlaplace(q=" << q_ << ",n=" << n_ << ")";
    return os.str();
  }
  double value(const Vector& u) const override {
    double s = 0.0;
    for (int e = 0; e <= n_; ++e) s += std::pow(std::abs(slope(u, e)), q_);
    return h_ * s / q_;
  }
  std::optional<Vector> min_subgradient(const Vector& u) const override { return gradient(u); }

 protected:
  Vector gradient(const Vector& u) const override {
    space_.require_dim(u);
    Vector phi(n_ + 1);
    for (int e = 0; e <= n_; ++e) phi[e] = flux(slope(u, e));
    Vector g(n_);
    for (int k = 0; k < n_; ++k) g[k] = (phi[k] - phi[k + 1]) / h_;
    return g;
  }
  Vector solve_shifted_hessian(const Vector& u, double shift, const Vector& rhs) const override {
    // Edge e couples u_e and u_{e+1}; in vector indices k = e-1 and k = e.
    Vector c(n_ + 1);
    for (int e = 0; e <= n_; ++e) c[e] = dflux(slope(u, e)) / (h_ * h_);
    Vector diag(n_), off(std::max(0, n_ - 1));
    for (int k = 0; k < n_; ++k) diag[k] = c[k] + c[k + 1] + shift;
    for (int k = 0; k + 1 < n_; ++k) off[k] = -c[k + 1];
    // Thomas algorithm; the matrix is symmetric and diagonally dominant.
    Vector cp(n_), dp(n_);
    cp[0] = n_ > 1 ? off[0] / diag[0] : 0.0;
    dp[0] = rhs[0] / diag[0];
    for (int k = 1; k < n_; ++k) {
      const double m = diag[k] - off[k - 1] * cp[k - 1];
      cp[k] = k + 1 < n_ ? off[k] / m : 0.0;
      dp[k] = (rhs[k] - off[k - 1] * dp[k - 1]) / m;
    }
    Vector d(n_);
    d[n_ - 1] = dp[n_ - 1];
    for (int k = n_ - 2; k >= 0; --k) d[k] = dp[k] - cp[k] * d[k + 1];
    return d;
  }

 private:
  double slope(const Vector& u, int e) const {
    const double left = e == 0 ? 0.0 : u[e - 1];
    const double right = e == n_ ? 0.0 : u[e];
    return (right - left) / h_;
  }
  double flux(double s) const { return q_ == 2.0 ? s : std::pow(std::abs(s), q_ - 2.0) * s; }
  double dflux(double s) const {
    return q_ == 2.0 ? 1.0 : (q_ - 1.0) * std::pow(std::abs(s), q_ - 2.0);
  }

  int n_;
  double q_, h_;
  NormedSpace space_;
};

}  // namespace

double qlaplace_h(int n_interior) { return 1.0 / (n_interior + 1.0); }

NormedSpace qlaplace_space(int n_interior) {
  return NormedSpace::weighted_l2(Vector::Constant(n_interior, qlaplace_h(n_interior)));
}

EnergyPtr quadratic_energy(Matrix Q, NormedSpace space) {
  return std::make_shared<QuadraticEnergy>(std::move(Q), std::move(space));
}
EnergyPtr abs_energy(Eigen::Index dim, double c) { return std::make_shared<AbsEnergy>(dim, c); }
EnergyPtr box_indicator(Vector lo, Vector hi, NormedSpace space) {
  return std::make_shared<BoxIndicator>(std::move(lo), std::move(hi), std::move(space));
}
EnergyPtr qlaplace_energy(int n_interior, double q) {
  return std::make_shared<QLaplaceEnergy>(n_interior, q);
}

}  // namespace interp
