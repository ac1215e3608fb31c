#pragma once

#include "qredux/priors.hpp"
#include "qredux/specfun.hpp"

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

// Closed-form spectra of the Bayesian density matrices and the ballot-path
// eigenvector basis.
//
// For the q_u prior the 2^n x 2^n average of the n-fold tensor power has
// floor(n/2)+1 distinct eigenvalues
//   lambda_h = 2^-n Gamma(5/2-u) Gamma(2+n-h-u) Gamma(1+h-u)
//              / (Gamma(5/2+n/2-u) Gamma(2+n/2-u) Gamma(1-u)),
// h = 0..floor(n/2), with multiplicity (n-2h+1)^2 C(n+1,h) / (n+1).
// The eigenvectors are indexed by ballot paths: v_{h,s}(A,B) sums
// (-1)^{|X|} e_{X u X' u Y} over X within A and Y within the complement of
// A u B, where X' removes from B the elements whose rank from the top
// matches that of X in A.

namespace qredux::spectrum {

using specfun::BigInt;

struct Level {
  int h = 0;
  double lambda = 0.0;
  double log_lambda = 0.0;
  BigInt multiplicity;
};

struct SpectrumSummary {
  int n = 0;
  std::vector<Level> levels; // h ascending, lambda strictly decreasing

  // | sum multiplicity_h lambda_h - 1 |
  double trace_error() const;
  // sum of multiplicities (should be 2^n)
  BigInt total_multiplicity() const;
};

// (lambda_h, log lambda_h); valid through n = 4096 (log-space gammas).
std::pair<double, double> eigenvalue(int n, double u, int h);

// Exact multiplicity (n-2h+1)^2 C(n+1,h) / (n+1).
BigInt multiplicity(int n, int h);

// Number of ballot paths from (0,0) to (n, n-2h): (n-2h+1) C(n+1,h) / (n+1).
BigInt ballot_count(int n, int h);

// Full spectrum under the q_u prior.
SpectrumSummary spectrum_qu(int n, double u);

// The u = 1/2 leading eigenvalue next to catalan(n+1)/4^n; the caller
// asserts the two agree.
struct CatalanCheck {
  double closed_form;
  double catalan_form;
};
CatalanCheck catalan_leading_eigenvalue_check(int n);

// Lattice path with n-h up-steps and h down-steps never dipping below the
// axis. Steps are labelled 1..n; up_labels holds the first h up-steps (A_P)
// and down_labels the h down-steps (B_P), as subset masks.
struct BallotPath {
  int n = 0;
  int h = 0;
  std::vector<std::int8_t> steps; // +1 / -1
  std::uint32_t up_labels = 0;    // A_P
  std::uint32_t down_labels = 0;  // B_P
};

std::vector<BallotPath> ballot_paths(int n, int h, std::size_t cap = 1u << 22);

// Sparse vector over subset masks with integer coefficients (+-1 here).
struct SparseVec {
  int n = 0;
  std::vector<std::pair<std::uint32_t, int>> terms; // sorted by mask
};

// v_{h,s}(A, B); A, B disjoint h-subsets given as masks, h <= s <= n-h.
SparseVec eigenvector(int n, int h, int s, std::uint32_t mask_a, std::uint32_t mask_b);

struct BasisVec {
  int h = 0;
  int s = 0;
  BallotPath path;
  SparseVec vec;
};

// All 2^n basis vectors v_{h,s}(P).
std::vector<BasisVec> eigenbasis(int n, int cap = 10);

// Spectrum of the generalized family: lambda_{h,s} listed for every
// 0 <= h <= s <= n-h, each with the per-path multiplicity (independent of s).
struct GenLevel {
  int h = 0;
  int s = 0;
  double lambda = 0.0;
  BigInt multiplicity;
};

std::vector<GenLevel> generalized_eigenvalues(int n, double u,
                                              const std::function<double(int)>& f);

// Eigenvalues of the average of the tensor power against a spherically
// symmetric prior w:
//   lambda_h = pi / (2^{n-1} (n-2h+1)) int_{-1}^{1} r (1+r)^{n-h+1} (1-r)^h w(|r|) dr,
// multiplicities as in the q_u case.
SpectrumSummary spectrum_from_radial_prior(int n, const priors::PriorSpec& p,
                                           double tol = 1e-10);

} // namespace qredux::spectrum
