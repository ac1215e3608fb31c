#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

// Gamma-family special functions and exact combinatorics.
//
// All gamma-family routines use embedded coefficient tables (Lanczos for
// log-gamma, Bernoulli asymptotics for digamma/trigamma) so results do not
// depend on the platform libm. Arguments must be strictly positive.

namespace qredux::specfun {

using BigInt = boost::multiprecision::cpp_int;

// log Gamma(x), x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

// psi(x) = d/dx log Gamma(x), x > 0.
double digamma(double x);

// psi'(x), x > 0.
double trigamma(double x);

// Exact binomial coefficient; 0 for k outside [0, n].
BigInt binomial(std::int64_t n, std::int64_t k);

// log C(n, k) via log_gamma; k outside [0, n] is a domain error.
double log_binomial(std::int64_t n, std::int64_t k);

// m-th Catalan number C(2m, m)/(m+1), exact.
BigInt catalan(std::int64_t m);

// Natural log of a positive big integer.
double log_big(const BigInt& v);

namespace detail {
// Extended-precision core used where log-gammas of order n log n are
// subtracted and the difference must stay accurate to ~1e-13 absolute.
long double log_gamma_ld(long double x);
} // namespace detail

// Terminating Gauss 2F1 at unit argument, evaluated along two independent
// routes: termwise summation and the closed-form gamma ratio
// Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)).
struct Gauss2F1 {
  double direct;
  double closed_form;
};

// Requires a or b to be a non-positive integer; throws std::domain_error if
// neither parameter terminates the series or if a denominator parameter
// (c)_k vanishes before termination.
Gauss2F1 gauss_2f1_terminating(double a, double b, double c);

} // namespace qredux::specfun
