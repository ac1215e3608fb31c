#pragma once

#include "qredux/parallel.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>

// Two-level density matrices and their n-fold tensor products.
//
// A state is a point (x, y, z) of the closed unit ball; the induced matrix
// is rho = [[1+z, x-iy], [x+iy, 1-z]] / 2.
//
// Rows and columns of 2^n x 2^n matrices are indexed by subsets of
// {1..n}: element k maps to bit (n-k) of the subset mask, and subset I sits
// at row full_mask ^ mask(I). With this layout the n-fold tensor product of
// rho coincides entrywise with the iterated Kronecker product of the 2x2
// matrix, and the n = 1 matrix is rho itself.

namespace qredux::qstate {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

struct BlochState {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double r2() const { return x * x + y * y + z * z; }
  double r() const;
};

// Throws std::domain_error if x^2+y^2+z^2 > 1 beyond tolerance.
void require_in_ball(const BlochState& s, double tol = 1e-12);

// Counts of element membership in an index pair (I, J): in both, in
// neither, J only, I only. The four counts sum to n.
struct OverlapProfile {
  int in_in = 0;
  int out_out = 0;
  int out_in = 0; // not in I, in J
  int in_out = 0; // in I, not in J

  static OverlapProfile of(int n, std::uint32_t mask_i, std::uint32_t mask_j);
};

inline std::uint32_t full_mask(int n) { return (n >= 32) ? ~0u : ((1u << n) - 1u); }
inline std::uint32_t element_bit(int k, int n) { return 1u << (n - k); }
inline std::uint32_t subset_to_row(std::uint32_t mask, int n) { return full_mask(n) ^ mask; }
inline std::uint32_t row_to_subset(std::uint32_t row, int n) { return full_mask(n) ^ row; }

// rho for a valid state.
CMatrix density_matrix(const BlochState& s);

// -Tr rho log rho in nats; log 2 at r = 0, 0 at r = 1.
double von_neumann_entropy_2x2(const BlochState& s);

// Entry (I, J) of the n-fold tensor power,
//   2^-n (1+z)^{n_in_in} (1-z)^{n_out_out} (x+iy)^{n_out_in} (x-iy)^{n_in_out},
// with 0^0 = 1 at boundary states.
Complex tensor_entry(const BlochState& s, int n, std::uint32_t mask_i, std::uint32_t mask_j);

// Full 2^n x 2^n tensor power; trace 1. Throws when n exceeds the cap.
CMatrix tensor_product_matrix(const BlochState& s, int n, Exec exec = Exec::Parallel,
                              int cap = 12);

} // namespace qredux::qstate
