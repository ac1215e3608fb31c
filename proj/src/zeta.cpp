#include "qredux/zeta.hpp"

#include "qredux/oracle.hpp"
#include "qredux/specfun.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qredux::zeta {

using specfun::log_gamma;

namespace {

constexpr double kLog2 = 0.69314718055994530942;

void require_u(double u) {
  if (!(u < 1.0)) throw std::domain_error("zeta: u must be < 1");
}

// log of the entry for block size c = |I| = |J| and overlap i = |I&J|.
// With n_in_in = i and n_out_out = n-2c+i the two overlap-difference gammas
// collapse to Gamma(2+c-u) Gamma(2+n-c-u); only m = n_out_in = c-i varies
// within a block.
double log_entry(int n, double u, int c, int i) {
  const int m = c - i;
  const double nh = 0.5 * n;
  return log_gamma(m + 1.0) - n * kLog2 + log_gamma(2.5 - u) + log_gamma(2.0 + c - u) +
         log_gamma(2.0 + n - c - u) - log_gamma(2.5 + nh - u) - log_gamma(2.0 + nh - u) -
         log_gamma(2.0 + m - u);
}

} // namespace

double zeta_entry(int n, double u, std::uint32_t mask_i, std::uint32_t mask_j) {
  require_u(u);
  const auto p = qstate::OverlapProfile::of(n, mask_i, mask_j);
  if (p.out_in != p.in_out) return 0.0; // Kronecker delta: needs |I| = |J|
  return std::exp(log_entry(n, u, p.in_in + p.in_out, p.in_in));
}

std::vector<std::vector<double>> zeta_entry_table(int n, double u) {
  require_u(u);
  std::vector<std::vector<double>> table(n + 1);
  for (int c = 0; c <= n; ++c) {
    const int imin = std::max(0, 2 * c - n);
    table[c].assign(c - imin + 1, 0.0);
    for (int i = imin; i <= c; ++i) table[c][i - imin] = std::exp(log_entry(n, u, c, i));
  }
  return table;
}

ZetaMatrix zeta_matrix(int n, double u, Exec exec, int cap) {
  require_u(u);
  if (n < 1 || n > cap) throw std::domain_error("zeta_matrix: n outside [1, cap]");
  ZetaMatrix zm;
  zm.n = n;
  zm.u = u;
  zm.spectral = spectrum::spectrum_qu(n, u);

  const auto table = zeta_entry_table(n, u);
  const std::int64_t dim = std::int64_t(1) << n;
  RMatrix m(dim, dim);
  const int nt = (exec == Exec::Parallel) ? max_threads() : 1;
  // column-parallel: contiguous writes in the column-major storage
#pragma omp parallel for schedule(static) num_threads(nt) if (nt > 1)
  for (std::int64_t col = 0; col < dim; ++col) {
    const std::uint32_t mj = qstate::row_to_subset(static_cast<std::uint32_t>(col), n);
    const int cj = std::popcount(mj);
    for (std::int64_t row = 0; row < dim; ++row) {
      const std::uint32_t mi = qstate::row_to_subset(static_cast<std::uint32_t>(row), n);
      if (std::popcount(mi) != cj) {
        m(row, col) = 0.0;
        continue;
      }
      const int i = std::popcount(mi & mj);
      const int imin = std::max(0, 2 * cj - n);
      m(row, col) = table[cj][i - imin];
    }
  }
  zm.trace_error = std::abs(m.trace() - 1.0);
  zm.entries = std::move(m);
  return zm;
}

ZetaMatrix zeta_spectral(int n, double u) {
  require_u(u);
  ZetaMatrix zm;
  zm.n = n;
  zm.u = u;
  zm.spectral = spectrum::spectrum_qu(n, u);
  zm.trace_error = zm.spectral.trace_error();
  return zm;
}

RMatrix generalized_matrix(int n, double u, const std::function<double(int)>& f, Exec exec,
                           int cap) {
  require_u(u);
  if (n < 1 || n > cap) throw std::domain_error("generalized_matrix: n outside [1, cap]");
  for (int x = 1; x <= n; ++x)
    if (std::abs(f(x) - f(-x)) > 1e-12 * std::max(1.0, std::abs(f(x))))
      throw std::domain_error("generalized_matrix: f is not symmetric");

  // Distinct values per (c, i), as in the q_u table.
  std::vector<std::vector<double>> table(n + 1);
  for (int c = 0; c <= n; ++c) {
    const int imin = std::max(0, 2 * c - n);
    table[c].assign(c - imin + 1, 0.0);
    for (int i = imin; i <= c; ++i) {
      const int m = c - i;
      const int b = n - 2 * c + i;
      table[c][i - imin] =
          std::exp(log_gamma(m + 1.0) - log_gamma(2.0 + m - u)) * f(i - b);
    }
  }

  const std::int64_t dim = std::int64_t(1) << n;
  RMatrix mat(dim, dim);
  const int nt = (exec == Exec::Parallel) ? max_threads() : 1;
#pragma omp parallel for schedule(static) num_threads(nt) if (nt > 1)
  for (std::int64_t col = 0; col < dim; ++col) {
    const std::uint32_t mj = qstate::row_to_subset(static_cast<std::uint32_t>(col), n);
    const int cj = std::popcount(mj);
    for (std::int64_t row = 0; row < dim; ++row) {
      const std::uint32_t mi = qstate::row_to_subset(static_cast<std::uint32_t>(row), n);
      if (std::popcount(mi) != cj) {
        mat(row, col) = 0.0;
        continue;
      }
      const int i = std::popcount(mi & mj);
      const int imin = std::max(0, 2 * cj - n);
      mat(row, col) = table[cj][i - imin];
    }
  }
  return mat;
}

AveragedMatrix averaged_matrix(int n, const priors::PriorSpec& p, double tol, Exec exec,
                               int cap) {
  if (n < 1 || n > cap) throw std::domain_error("averaged_matrix: n outside [1, cap]");
  oracle::QuadratureSpec spec;
  spec.tolerance = tol;
  // q_u radial integrands are weight times polynomial: Gauss-Jacobi is
  // effectively exact. Priors with log endpoint factors go through the
  // double-exponential rule. The angular rules are exact for the degree-n
  // entries at these orders, so only the radial rule is refined.
  if (p.kind == priors::PriorKind::QU) {
    spec.radial_rule = oracle::QuadratureSpec::Radial::GaussJacobi;
    spec.radial_order = std::max(24, n + 4);
  } else {
    spec.radial_rule = oracle::QuadratureSpec::Radial::TanhSinh;
    spec.radial_order = 7; // refinement level
  }
  spec.theta_order = n + 4;
  spec.phi_order = 2 * n + 4;
  spec.refine_angular = false;
  auto res = oracle::ball_average(
      [&](const qstate::BlochState& s) {
        return qstate::tensor_product_matrix(s, n, Exec::Serial);
      },
      1 << n, p, spec, exec);
  AveragedMatrix out;
  out.matrix = std::move(res.matrix);
  out.error_estimate = res.error_estimate;
  out.converged = res.converged;
  return out;
}

} // namespace qredux::zeta
