#pragma once

#include "qredux/qstate.hpp"

#include <functional>
#include <string>

// Prior probability densities on the Bloch ball.
//
// The q_u family (u < 1):
//   q_u(x,y,z) = Gamma(5/2-u) / (pi^{3/2} Gamma(1-u) (1-r^2)^u),
// uniform on the ball at u = 0 and proportional to the SLD (quantum
// Fisher) volume element at u = 1/2.
//
// The Kubo-Mori family replaces the r of the q_u volume form by
// log((1+r)/(1-r)); general monotone-metric volume elements are
//   r^2 sin(theta) / ( f((1-r)/(1+r)) sqrt(1-r^2) (1+r) )
// for an operator monotone f with f(1) = 1 and f(t) = t f(1/t).

namespace qredux::priors {

using qstate::BlochState;

// Operator-monotone function handle; symmetry is checked at construction.
struct MonotoneFn {
  std::string name;
  std::function<double(double)> f;
};

// Built-in handles: arithmetic mean (SLD), logarithmic mean (Kubo-Mori),
// exponential mean (the prior recovered from matching the quantum and
// classical redundancy asymptotics).
MonotoneFn monotone_sld();
MonotoneFn monotone_kmb();
MonotoneFn monotone_exp();

// Throws std::domain_error unless f(1) = 1 and f(t) = t f(1/t) hold at
// t in {2, 3, 10} within 1e-10.
void check_monotone_symmetry(const MonotoneFn& fn);

enum class PriorKind { QU, KuboMori, Monotone };

struct PriorSpec {
  PriorKind kind = PriorKind::QU;
  double u = 0.0;      // QU, KuboMori
  MonotoneFn f;        // Monotone
  double normalization = 1.0;

  static PriorSpec qu(double u);
  static PriorSpec kubo_mori(double u);
  static PriorSpec monotone(MonotoneFn fn);

  // Cartesian 3D density w(r) of the prior (not the r^2-weighted radial
  // marginal). The three-argument overload takes precomputed endpoint
  // distances so quadrature nodes clustered near r = 1 keep full accuracy.
  double radial_density(double r) const;
  double radial_density(double r, double one_minus_r, double one_plus_r) const;

  // Exponent a such that w(r) = smooth(r) * (1-r^2)^{-a}; used to match a
  // Gauss-Jacobi weight to the endpoint singularity.
  double jacobi_exponent() const;
  double radial_smooth(double r, double one_minus_r, double one_plus_r) const;

  std::string describe() const;
};

// q_u density at a state; u < 1, and r < 1 whenever u > 0.
double qu_density(double u, const BlochState& s);

// Normalization constant Gamma(5/2-u) / (pi^{3/2} Gamma(1-u)).
double qu_norm(double u);

// Quantum-Jeffreys candidate (1-r^2)^{-1/2} / pi^2; equals qu_density(1/2, s).
double sld_jeffreys_volume(const BlochState& s);

// det of the SLD Fisher matrix, (1-r^2)^{-1}.
double sld_fisher_det(double r);

// Kubo-Mori density with respect to dr dtheta dphi.
double kubo_mori_density(double u, double r, double theta);

// Unnormalized monotone-metric volume element with respect to dr dtheta dphi.
double monotone_volume_element(const MonotoneFn& fn, double r, double theta);

} // namespace qredux::priors
