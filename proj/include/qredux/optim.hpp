#pragma once

// Asymptotic minimax over (u, r) and maximin over u, restricted to the
// one-parameter prior family.
//
// The r-dependent part of the redundancy constant is
//   f(r,u) = -(1-u) log(1-r^2) + (1/(2r)) log((1-r)/(1+r))
//            + log Gamma(1-u) - log Gamma(5/2-u);
// setting df/dr = 0 ties the parameters through
//   u = 1 - 1/(2r^2) - ((1-r^2)/(4r^3)) log((1-r)/(1+r)),
// and the minimax follows by minimizing f along that curve. The maximin
// parameter solves 2 (1-u)^3 (psi'(1-u) - psi'(5/2-u)) = 1.

namespace qredux::optim {

// +inf for r = 1 with u < 1/2 (unbounded), -inf for r = 1 with u > 1/2.
double f_ru(double r, double u);

// Stationary u along r from the first-order condition; limit 2/3 as r -> 0.
double stationary_u_of_r(double r);

struct MinimaxResult {
  double u_star = 0.0;
  double r_star = 0.0;
  double f_value = 0.0;  // f(r*, u*)
  double constant = 0.0; // f_value - 1/2 - (3/2) log 2
  int iterations = 0;
  double tolerance_achieved = 0.0;
};

MinimaxResult solve_minimax(double tol = 1e-10);

// 2 (1-u)^3 (psi'(1-u) - psi'(5/2-u)) - 1.
double maximin_equation_residual(double u);

struct MaximinResult {
  double u_star = 0.0;
  double constant = 0.0; // u-dependent part of the Bayes-redundancy constant
  int iterations = 0;
  double residual = 0.0;
};

MaximinResult solve_maximin(double tol = 1e-10);

// u-dependent part of the asymptotic Bayes redundancy (the curve whose
// interior maximum gives the maximin constant).
double bayes_constant_d8(double u);

} // namespace qredux::optim
