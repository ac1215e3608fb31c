#include "qredux/asymptotics.hpp"

#include "qredux/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace qredux::asymptotics {

using specfun::digamma;
using specfun::log_gamma;

namespace {

constexpr double kLog2 = 0.69314718055994530942;
constexpr double kHalfLogPi = 0.57236494292470008707;

void require_u(double u, const char* fn) {
  if (!(u < 1.0)) throw std::domain_error(std::string(fn) + ": u must be < 1");
}

} // namespace

double AsymptoticValue::value_at(double n) const {
  return linear_coefficient * n + leading_coefficient * std::log(n) + constant_term;
}

double quantum_term(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("quantum_term: r outside [0, 1]");
  if (r == 1.0) return -kLog2; // (1-r) log(1-r) -> 0
  // Even series -1 + r^2/6 + r^4/20 + r^6/42 (general term r^{2k}/((2k+1)(2k+2)))
  // below the cancellation threshold.
  if (r < 1e-4) {
    double r2 = r * r;
    return -1.0 + r2 / 6.0 + r2 * r2 / 20.0;
  }
  return 0.5 * ((1.0 - r) * std::log1p(-r) - (1.0 + r) * std::log1p(r)) / r;
}

AsymptoticValue redundancy_asymptotic(double u, double r) {
  require_u(u, "redundancy_asymptotic");
  if (!(r >= 0.0 && r < 1.0))
    throw std::domain_error("redundancy_asymptotic: requires 0 <= r < 1 (use the boundary form at r = 1)");
  AsymptoticValue v;
  v.leading_coefficient = 1.5;
  v.error_order = "1/n";
  // -(1-u) log(1-r^2) + (1/(2r)) log((1-r)/(1+r))
  //   = quantum_term(r) + u log(1-r^2) - (1/2) log(1-r^2).
  double rterms;
  if (r == 0.0)
    rterms = -1.0;
  else
    rterms = -(1.0 - u) * (std::log1p(-r) + std::log1p(r)) +
             0.5 * (std::log1p(-r) - std::log1p(r)) / r;
  v.constant_term = -0.5 - 1.5 * kLog2 + rterms + log_gamma(1.0 - u) - log_gamma(2.5 - u);
  return v;
}

AsymptoticValue boundary_asymptotic(double u) {
  if (!(u <= 1.0)) throw std::domain_error("boundary_asymptotic: u must be <= 1");
  AsymptoticValue v;
  v.leading_coefficient = 2.0 - u;
  v.constant_term = (2.0 * u - 3.0) * kLog2 + kHalfLogPi - log_gamma(2.5 - u);
  v.error_order = "1/n";
  return v;
}

AsymptoticValue vn_entropy_asymptotic(double u) {
  require_u(u, "vn_entropy_asymptotic");
  AsymptoticValue v;
  const double dd = digamma(5.0 - 2.0 * u) - digamma(1.0 - u);
  v.linear_coefficient = (-7.0 + 5.0 * u) / (2.0 * (2.0 - u) * (1.0 - u)) + dd;
  v.leading_coefficient = 1.5;
  v.constant_term = (-3.5 + 2.0 * u) * kLog2 -
                    (14.0 - 20.0 * u + 7.0 * u * u) / (2.0 * (2.0 - u) * (1.0 - u)) +
                    log_gamma(1.0 - u) - log_gamma(2.5 - u) + (2.0 - 2.0 * u) * dd;
  v.error_order = "1/n^" + std::to_string(1.0 - u);
  return v;
}

AsymptoticValue cb_redundancy_classical(double u, double r) {
  require_u(u, "cb_redundancy_classical");
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("cb_redundancy_classical: r outside [0, 1)");
  AsymptoticValue v;
  v.leading_coefficient = 1.5;
  v.constant_term = -1.5 * (kLog2 + 1.0) - (0.5 - u) * (std::log1p(-r) + std::log1p(r)) +
                    log_gamma(1.0 - u) - log_gamma(2.5 - u);
  v.error_order = "o(1)";
  return v;
}

AsymptoticValue cb_minimax_classical() {
  AsymptoticValue v;
  v.leading_coefficient = 1.5;
  v.constant_term = -1.5 * (kLog2 + 1.0) + kHalfLogPi;
  v.error_order = "o(1)";
  return v;
}

AsymptoticValue cb_boundary_classical() {
  AsymptoticValue v;
  v.leading_coefficient = 1.0;
  v.constant_term = kLog2 - 1.0;
  v.error_order = "o(1)";
  return v;
}

} // namespace qredux::asymptotics
