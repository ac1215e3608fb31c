#pragma once

#include "qredux/parallel.hpp"
#include "qredux/priors.hpp"
#include "qredux/spectrum.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

// The Bayesian density matrices: averages of the n-fold tensor power of a
// two-level state against a prior on the Bloch ball.
//
// Under q_u the entries have the closed form
//   Z_IJ = delta_{n_out_in, n_in_out} ((n - n_in_in - n_out_out)/2)! 2^-n
//          Gamma(5/2-u) Gamma(2 + n/2 + (n_in_in - n_out_out)/2 - u)
//          Gamma(2 + n/2 + (n_out_out - n_in_in)/2 - u)
//        / (Gamma(5/2 + n/2 - u) Gamma(2 + n/2 - u)
//           Gamma(2 + (n - n_in_in - n_out_out)/2 - u)),
// real, nonzero only when |I| = |J|, and within a block dependent only on
// |I intersect J|.

namespace qredux::zeta {

using RMatrix = Eigen::MatrixXd;
using CMatrix = Eigen::MatrixXcd;

// Single entry from subset masks; u < 1.
double zeta_entry(int n, double u, std::uint32_t mask_i, std::uint32_t mask_j);

// Distinct entry values per block structure: table[c][i] is the entry for
// |I| = |J| = c and |I intersect J| = i (i ranges over max(0, 2c-n)..c).
std::vector<std::vector<double>> zeta_entry_table(int n, double u);

struct ZetaMatrix {
  int n = 0;
  double u = 0.0;
  std::optional<RMatrix> entries; // materialized for n <= cap only
  spectrum::SpectrumSummary spectral;
  double trace_error = 0.0;
};

// Dense entries plus spectral summary; n <= cap (default 12).
ZetaMatrix zeta_matrix(int n, double u, Exec exec = Exec::Parallel, int cap = 12);

// Spectral-only form, any n the gamma evaluations support.
ZetaMatrix zeta_spectral(int n, double u);

// Generalized family: entries delta * m! / Gamma(2+m-u) * f(n_in_in - n_out_out)
// with m = (n - n_in_in - n_out_out)/2. f must satisfy f(x) = f(-x).
RMatrix generalized_matrix(int n, double u, const std::function<double(int)>& f,
                           Exec exec = Exec::Parallel, int cap = 10);

struct AveragedMatrix {
  CMatrix matrix;
  double error_estimate = 0.0;
  bool converged = false;
};

// Quadrature average of the tensor power against an arbitrary spherically
// symmetric prior (forwards to the brute-force ball quadrature).
AveragedMatrix averaged_matrix(int n, const priors::PriorSpec& p, double tol = 1e-9,
                               Exec exec = Exec::Parallel, int cap = 8);

} // namespace qredux::zeta
