#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

// Quadrature substrate shared by the prior-normalization checks and the
// brute-force verification machinery.
//
//  * Gauss-Legendre / Gauss-Jacobi rules on [-1,1] (Golub-Welsch). The
//    Jacobi weight (1-x)^alpha (1+x)^beta absorbs the (1-r^2)^{-u} prior
//    singularity, so polynomial-times-weight radial integrands are exact.
//  * tanh-sinh (double-exponential) rule for integrands with algebraic or
//    logarithmic endpoint singularities that do not match a Jacobi weight.

namespace qredux::quad {

struct GaussRule {
  std::vector<double> nodes;   // ascending, in (-1, 1)
  std::vector<double> weights; // positive
};

// n-point Gauss-Legendre rule.
GaussRule gauss_legendre(int n);

// n-point Gauss-Jacobi rule for weight (1-x)^alpha (1+x)^beta, alpha,beta > -1.
GaussRule gauss_jacobi(int n, double alpha, double beta);

// Neumaier-compensated accumulator.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

// tanh-sinh node on (-1, 1): abscissa with both endpoint distances carried
// explicitly so integrands can evaluate (1 -+ x) without cancellation.
struct DENode {
  double x;
  double one_minus_x;
  double one_plus_x;
  double weight; // includes the step size h
};

// All nodes of the rule with step h = 2^-level over |t| <= t_max.
std::vector<DENode> tanh_sinh_nodes(int level);

struct DEResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int levels = 0;
  bool converged = false;
};

// Integrate f(x, 1-x, 1+x) over (-1, 1), refining until successive levels
// agree to tol (relative to max(1, |I|)).
template <class F>
DEResult tanh_sinh(F&& f, double tol = 1e-12, int max_level = 10) {
  DEResult res;
  double prev = 0.0;
  for (int level = 2; level <= max_level; ++level) {
    const auto nodes = tanh_sinh_nodes(level);
    CompensatedSum acc;
    for (const auto& nd : nodes) acc.add(nd.weight * f(nd.x, nd.one_minus_x, nd.one_plus_x));
    double cur = acc.value();
    res.levels = level;
    res.value = cur;
    if (level > 2) {
      res.error_estimate = std::abs(cur - prev);
      if (res.error_estimate <= tol * std::max(1.0, std::abs(cur))) {
        res.converged = true;
        return res;
      }
    }
    prev = cur;
  }
  return res;
}

// Integrate g(r, 1-r) over (0, 1).
template <class F>
DEResult tanh_sinh_01(F&& g, double tol = 1e-12, int max_level = 10) {
  return tanh_sinh(
      [&](double /*x*/, double omx, double opx) { return 0.5 * g(0.5 * opx, 0.5 * omx); }, tol,
      max_level);
}

} // namespace qredux::quad
