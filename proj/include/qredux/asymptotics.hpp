#pragma once

#include <string>

// Closed-form large-n expressions for the redundancy and entropy
// quantities, plus the classical comparison values obtained by plugging the
// Bloch-ball data into the parametric (commutative) redundancy formulas.

namespace qredux::asymptotics {

struct AsymptoticValue {
  double linear_coefficient = 0.0; // multiplies n (entropy asymptotics only)
  double leading_coefficient = 0.0; // multiplies log n
  double constant_term = 0.0;
  std::string error_order;

  double value_at(double n) const;
};

// Relative-entropy asymptotics for 0 <= r < 1:
//   (3/2) log n - 1/2 - (3/2) log 2 - (1-u) log(1-r^2)
//   + (1/(2r)) log((1-r)/(1+r)) + log Gamma(1-u) - log Gamma(5/2-u),
// with the r = 0 limit replacing the two r-terms by -1.
AsymptoticValue redundancy_asymptotic(double u, double r);

// Boundary (r = 1) asymptotics:
//   (2-u) log n + (2u-3) log 2 + (1/2) log pi - log Gamma(5/2-u).
AsymptoticValue boundary_asymptotic(double u);

// (1/(2r)) ((1-r) log(1-r) - (1+r) log(1+r)): -1 at r = 0, -log 2 at r = 1,
// monotonically increasing between.
double quantum_term(double r);

// Von Neumann entropy asymptotics (linear term included); error O(n^{u-1}).
AsymptoticValue vn_entropy_asymptotic(double u);

// Classical Bayes-redundancy value specialized to the Bloch ball:
//   (3/2)(log n - log 2 - 1) - (1/2-u) log(1-r^2)
//   + log Gamma(1-u) - log Gamma(5/2-u).
AsymptoticValue cb_redundancy_classical(double u, double r);

// Classical minimax value (3/2)(log n - log 2 - 1) + (1/2) log pi.
AsymptoticValue cb_minimax_classical();

// Classical boundary value log n + log 2 - 1.
AsymptoticValue cb_boundary_classical();

} // namespace qredux::asymptotics
