#pragma once

#include "qredux/specfun.hpp"

#include <vector>

// Universal compression planning: project n-signal blocks onto the span of
// the dominant eigenspaces of the Bayesian matrix, keeping whole eigenspaces
// in decreasing-eigenvalue order until their total weight reaches 1-epsilon.

namespace qredux::compress {

using specfun::BigInt;

struct CompressionPlan {
  int n = 0;
  double u = 0.0;
  double epsilon = 0.0;
  std::vector<int> included_levels; // prefix {0, 1, ..., k}
  BigInt subspace_dim;
  double rate_qubits_per_signal = 0.0; // log2(dim) / n
  double prior_mass = 0.0;             // sum of mult_h lambda_h over the plan
};

// Greedy dominant-eigenspace plan; 0 < epsilon < 1, u < 1.
CompressionPlan plan(int n, double u, double epsilon);

// Probability mass of the n-fold source at radius r captured by the plan's
// subspace (a fidelity proxy).
double retained_weight(const CompressionPlan& p, double r);

struct RatePoint {
  double epsilon = 0.0;
  double rate = 0.0;
  double prior_mass = 0.0;
  BigInt dim;
};

std::vector<RatePoint> rate_curve(int n, double u, const std::vector<double>& epsilons);

} // namespace qredux::compress
