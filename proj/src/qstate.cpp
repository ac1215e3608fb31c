#include "qredux/qstate.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qredux::qstate {

namespace {

double int_pow(double base, int e) {
  if (e == 0) return 1.0; // covers 0^0 at boundary states
  double acc = 1.0;
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

Complex int_pow(Complex base, int e) {
  Complex acc(1.0, 0.0);
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

double xlogx(double t) { return t > 0.0 ? t * std::log(t) : 0.0; }

} // namespace

double BlochState::r() const { return std::sqrt(r2()); }

void require_in_ball(const BlochState& s, double tol) {
  if (s.r2() > 1.0 + tol)
    throw std::domain_error("BlochState outside the unit ball: r^2 = " + std::to_string(s.r2()));
}

OverlapProfile OverlapProfile::of(int n, std::uint32_t mask_i, std::uint32_t mask_j) {
  const std::uint32_t full = full_mask(n);
  if ((mask_i & ~full) || (mask_j & ~full))
    throw std::domain_error("OverlapProfile: mask uses positions beyond n");
  OverlapProfile p;
  p.in_in = std::popcount(mask_i & mask_j);
  p.out_out = std::popcount(~(mask_i | mask_j) & full);
  p.out_in = std::popcount(mask_j & ~mask_i);
  p.in_out = std::popcount(mask_i & ~mask_j);
  return p;
}

CMatrix density_matrix(const BlochState& s) {
  require_in_ball(s);
  CMatrix m(2, 2);
  m(0, 0) = 0.5 * (1.0 + s.z);
  m(0, 1) = Complex(0.5 * s.x, -0.5 * s.y);
  m(1, 0) = Complex(0.5 * s.x, 0.5 * s.y);
  m(1, 1) = 0.5 * (1.0 - s.z);
  return m;
}

double von_neumann_entropy_2x2(const BlochState& s) {
  require_in_ball(s);
  double r = std::min(s.r(), 1.0);
  return -xlogx(0.5 * (1.0 - r)) - xlogx(0.5 * (1.0 + r));
}

Complex tensor_entry(const BlochState& s, int n, std::uint32_t mask_i, std::uint32_t mask_j) {
  const auto p = OverlapProfile::of(n, mask_i, mask_j);
  const double scale = std::ldexp(1.0, -n);
  const Complex xpy(s.x, s.y), xmy(s.x, -s.y);
  return scale * int_pow(1.0 + s.z, p.in_in) * int_pow(1.0 - s.z, p.out_out) *
         int_pow(xpy, p.out_in) * int_pow(xmy, p.in_out);
}

CMatrix tensor_product_matrix(const BlochState& s, int n, Exec exec, int cap) {
  require_in_ball(s);
  if (n < 1 || n > cap)
    throw std::domain_error("tensor_product_matrix: n outside [1, cap]");
  const std::int64_t dim = std::int64_t(1) << n;

  // power tables: each entry is a product of four table lookups
  std::vector<double> pz(n + 1), mz(n + 1);
  std::vector<Complex> xpy(n + 1), xmy(n + 1);
  pz[0] = mz[0] = 1.0;
  xpy[0] = xmy[0] = Complex(1.0, 0.0);
  for (int k = 1; k <= n; ++k) {
    pz[k] = pz[k - 1] * (1.0 + s.z);
    mz[k] = mz[k - 1] * (1.0 - s.z);
    xpy[k] = xpy[k - 1] * Complex(s.x, s.y);
    xmy[k] = xmy[k - 1] * Complex(s.x, -s.y);
  }
  const double scale = std::ldexp(1.0, -n);

  CMatrix m(dim, dim);
  const int nt = (exec == Exec::Parallel) ? max_threads() : 1;
  // column-parallel: contiguous writes in the column-major storage
#pragma omp parallel for schedule(static) num_threads(nt) if (nt > 1)
  for (std::int64_t col = 0; col < dim; ++col) {
    const std::uint32_t mj = row_to_subset(static_cast<std::uint32_t>(col), n);
    for (std::int64_t row = 0; row < dim; ++row) {
      const std::uint32_t mi = row_to_subset(static_cast<std::uint32_t>(row), n);
      const auto p = OverlapProfile::of(n, mi, mj);
      m(row, col) = scale * pz[p.in_in] * mz[p.out_out] * xpy[p.out_in] * xmy[p.in_out];
    }
  }
  return m;
}

} // namespace qredux::qstate
