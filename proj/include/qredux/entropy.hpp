#pragma once

#include "qredux/qstate.hpp"
#include "qredux/specfun.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

// Exact entropy formulas built on the closed-form spectrum.
//
// The trace of the tensor power against log of the Bayesian matrix expands
// over eigenspace weights
//   w_h(r) = ballot(n,h) [ (1+r)^{n+1-h}(1-r)^h - (1+r)^h(1-r)^{n+1-h} ]
//            / (2^{n+1} r)
//          = ballot(n,h) (1-r^2)^{(n+1)/2} sinh((n-2h+1) atanh r) / (2^n r),
// which sum to 1; the relative entropy of the tensor power with respect to
// the Bayesian matrix is then
//   n/2 [(1-r)log((1-r)/2) + (1+r)log((1+r)/2)] - sum_h w_h(r) log lambda_h,
// an O(n) formula valid through n = 4096.

namespace qredux::entropy {

using Rational = boost::multiprecision::cpp_rational;

struct RedundancyReport {
  int n = 0;
  double u = 0.0;
  double r = 0.0;
  double relative_entropy = 0.0;
  std::vector<double> per_level_weights;
  std::optional<double> asymptotic_value;
  std::optional<double> residual;
};

// w_h(r); the r = 0 limit is multiplicity_h / 2^n.
double level_weight(int n, int h, double r);

// All weights h = 0..floor(n/2).
std::vector<double> level_weights(int n, double r);

// Exact-rational weights for rational r (oracle for the floating path; the
// weights sum to exactly 1).
std::vector<Rational> level_weights_exact(int n, const Rational& r);

// S(tensor power || Bayesian matrix) in nats; r = 1 reduces to -log lambda_0.
double relative_entropy_exact(int n, double u, double r);

// Report with weights and (optionally) the asymptotic value and residual.
RedundancyReport redundancy_report(int n, double u, double r, bool with_asymptotic = true);

// Von Neumann entropy of the Bayesian matrix, -sum mult_h lambda_h log lambda_h.
double von_neumann_entropy_zeta(int n, double u);

// Exact prior-averaged redundancy:
//   -n ((-7+5u)/(2(2-u)(1-u)) + psi(5-2u) - psi(1-u)) + S(zeta_n(u)).
double bayes_redundancy_exact(int n, double u);

// Average-risk gap of a mixture family against an arbitrary code state Q,
// computed both as sum_i w_i [S(P_i||Q) - S(P_i||M)] and as S(M||Q) with
// M the mixture. The two must agree and be nonnegative.
struct OptimalityGap {
  double average_risk_gap = 0.0;
  double mixture_relative_entropy = 0.0;
};

OptimalityGap bayes_optimality_gap(const std::vector<double>& weights,
                                   const std::vector<qstate::CMatrix>& family,
                                   const qstate::CMatrix& Q);

} // namespace qredux::entropy
