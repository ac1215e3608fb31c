#include "qredux/quadrature.hpp"

#include "qredux/specfun.hpp"

#include <Eigen/Dense>

#include <stdexcept>

namespace qredux::quad {

namespace {

// Golub-Welsch: nodes are the eigenvalues of the symmetric tridiagonal
// recurrence matrix, weights are mu0 times the squared first components.
GaussRule golub_welsch(const std::vector<double>& diag, const std::vector<double>& offdiag,
                       double mu0) {
  const int n = static_cast<int>(diag.size());
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) J(i, i) = diag[i];
  for (int i = 0; i + 1 < n; ++i) {
    J(i, i + 1) = offdiag[i];
    J(i + 1, i) = offdiag[i];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  if (es.info() != Eigen::Success) throw std::runtime_error("golub_welsch: eigensolver failed");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = es.eigenvalues()(i);
    double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

} // namespace

GaussRule gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

GaussRule gauss_jacobi(int n, double alpha, double beta) {
  if (n < 1) throw std::domain_error("gauss_jacobi: n must be >= 1");
  if (alpha <= -1.0 || beta <= -1.0)
    throw std::domain_error("gauss_jacobi: alpha, beta must be > -1");
  const double ab = alpha + beta;
  std::vector<double> diag(n), off(n > 1 ? n - 1 : 0);
  diag[0] = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    double d = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
    diag[k] = (beta * beta - alpha * alpha) / d;
  }
  if (n > 1) {
    off[0] = std::sqrt(4.0 * (1.0 + alpha) * (1.0 + beta) /
                       ((ab + 2.0) * (ab + 2.0) * (ab + 3.0)));
    for (int k = 2; k < n; ++k) {
      double s = 2.0 * k + ab;
      off[k - 1] = std::sqrt(4.0 * k * (k + alpha) * (k + beta) * (k + ab) /
                             (s * s * (s + 1.0) * (s - 1.0)));
    }
  }
  using specfun::log_gamma;
  double mu0 = std::exp((ab + 1.0) * 0.69314718055994530942 + log_gamma(alpha + 1.0) +
                        log_gamma(beta + 1.0) - log_gamma(ab + 2.0));
  return golub_welsch(diag, off, mu0);
}

std::vector<DENode> tanh_sinh_nodes(int level) {
  // x = tanh((pi/2) sinh t). The truncation depth matters: for weights like
  // (1-x)^{-u} with u near 1 most of the integral mass sits closer to the
  // endpoint than doubles can resolve, so nodes carry 1 -+ x analytically
  // (down to ~1e-124 at t_max = 5.2) instead of relying on 1 - x in floats.
  const double h = std::ldexp(1.0, -level);
  const double t_max = 5.2;
  const double half_pi = 1.5707963267948966192;
  std::vector<DENode> nodes;
  nodes.reserve(static_cast<std::size_t>(2.0 * t_max / h) + 2);
  const long kmax = static_cast<long>(t_max / h);
  for (long k = -kmax; k <= kmax; ++k) {
    const double t = k * h;
    const double y = half_pi * std::sinh(t);
    const double ay = std::abs(y);
    const double e2 = std::exp(-2.0 * ay);
    // For y >= 0: 1 - tanh(y) = 2 e^{-2y} / (1 + e^{-2y}).
    const double near = 2.0 * e2 / (1.0 + e2);
    const double far = 2.0 / (1.0 + e2);
    if (near == 0.0) continue;
    DENode nd;
    nd.x = std::copysign(1.0 - near, y);
    if (y >= 0.0) {
      nd.one_minus_x = near;
      nd.one_plus_x = far;
    } else {
      nd.one_minus_x = far;
      nd.one_plus_x = near;
    }
    const double dxdt = half_pi * std::cosh(t) * near * far; // sech^2(y) = (1-x)(1+x)
    nd.weight = h * dxdt;
    nodes.push_back(nd);
  }
  return nodes;
}

} // namespace qredux::quad
