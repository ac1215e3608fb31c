#pragma once

#include "qredux/parallel.hpp"
#include "qredux/priors.hpp"
#include "qredux/qstate.hpp"

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <vector>

// Brute-force verification machinery, kept independent of the closed-form
// paths it checks: dense Hermitian eigendecomposition, principal matrix
// logarithm, Kronecker products, and product quadrature over the Bloch ball.

namespace qredux::oracle {

using qstate::CMatrix;

struct EigResult {
  Eigen::VectorXd eigenvalues; // sorted descending
  CMatrix eigenvectors;        // columns matching eigenvalues
};

// Throws if M is not Hermitian within 1e-10 of its scale.
EigResult dense_hermitian_eig(const CMatrix& M);

// V diag(log lambda) V* on the eigenbasis. Eigenvalues in (-cutoff, cutoff)
// are treated as zero directions and mapped to 0 in the log (callers must
// not contract states with support there); eigenvalues below -cutoff are a
// domain error.
CMatrix matrix_log_psd(const CMatrix& M, double cutoff = 1e-13);

// Tr rho1 (log rho1 - log rho2) with the log contracted on the support of
// rho1; throws std::domain_error when rho1 has support on the null space of
// rho2 (relative entropy undefined).
double relative_entropy_dense(const CMatrix& rho1, const CMatrix& rho2, double cutoff = 1e-12);

// -Tr rho log rho.
double von_neumann_entropy_dense(const CMatrix& rho, double cutoff = 1e-13);

CMatrix kron(const CMatrix& A, const CMatrix& B);

struct QuadratureSpec {
  enum class Radial { GaussJacobi, GaussLegendre, TanhSinh };
  Radial radial_rule = Radial::GaussJacobi;
  int radial_order = 64;
  int theta_order = 64;
  int phi_order = 128;
  double tolerance = 1e-8;
  // Callers that know the angular orders are already exact for their
  // integrand (polynomial of bounded degree) can restrict the refinement
  // pass to the radial rule.
  bool refine_angular = true;
};

struct BallAverageResult {
  CMatrix matrix;        // refined value
  CMatrix coarse_matrix; // pre-refinement value, for non-convergence triage
  double error_estimate = 0.0; // max-abs entry change under one refinement
  bool converged = false;
};

// int integrand(s) w dV over the unit ball by product quadrature (radial x
// Gauss-Legendre in cos theta x uniform phi), refined once to estimate the
// error. Never throws on non-convergence; the caller inspects the flag.
BallAverageResult ball_average(const std::function<CMatrix(const qstate::BlochState&)>& integrand,
                               int dim, const priors::PriorSpec& p,
                               const QuadratureSpec& spec = {}, Exec exec = Exec::Parallel);

// Numerical verification of the trigonometric moment formulas and the beta
// integral used throughout the entry computations.
struct IntegralCheckReport {
  struct Item {
    std::string name;
    double deviation = 0.0;
  };
  std::vector<Item> items;
  double max_deviation = 0.0;
};

IntegralCheckReport standard_integral_check();

} // namespace qredux::oracle
