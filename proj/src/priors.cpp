#include "qredux/priors.hpp"

#include "qredux/quadrature.hpp"
#include "qredux/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qredux::priors {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kPiPow32 = 5.5683279968317078453; // pi^{3/2}

void require_u(double u) {
  if (!(u < 1.0)) throw std::domain_error("prior parameter u must be < 1");
}

// log((1+r)/(1-r)) / r, continuous through r = 0 (limit 2).
double log_ratio_over_r(double r, double omr, double opr) {
  if (r == 0.0) return 2.0;
  if (r < 0.5) return 2.0 * std::atanh(r) / r;
  return (std::log(opr) - std::log(omr)) / r;
}

double kubo_norm(double u) {
  using specfun::log_gamma;
  return (1.0 - u) * std::exp(log_gamma(2.5 - u) - log_gamma(1.0 - u)) /
         (kPiPow32 * (3.0 - 2.0 * u));
}

} // namespace

MonotoneFn monotone_sld() {
  return MonotoneFn{"sld", [](double t) { return 0.5 * (1.0 + t); }};
}

MonotoneFn monotone_kmb() {
  return MonotoneFn{"kmb", [](double t) {
                      // away from 1 the direct quotient is stable even for
                      // subnormal t; near 1 switch to log1p to avoid 0/0
                      if (t < 0.5 || t > 2.0) return (t - 1.0) / std::log(t);
                      double d = t - 1.0;
                      if (d == 0.0) return 1.0;
                      return d / std::log1p(d);
                    }};
}

MonotoneFn monotone_exp() {
  return MonotoneFn{"exp", [](double t) {
                      // t^{t/(t-1)}/e = exp(t log t/(t-1) - 1)
                      double g;
                      if (t < 0.5 || t > 2.0) {
                        g = t * std::log(t) / (t - 1.0);
                      } else {
                        double d = t - 1.0;
                        if (d == 0.0) return 1.0;
                        g = (1.0 + d) * std::log1p(d) / d;
                      }
                      return std::exp(g - 1.0);
                    }};
}

void check_monotone_symmetry(const MonotoneFn& fn) {
  if (!fn.f) throw std::domain_error("monotone handle '" + fn.name + "' has no function");
  if (std::abs(fn.f(1.0) - 1.0) > 1e-10)
    throw std::domain_error("monotone handle '" + fn.name + "': f(1) != 1");
  for (double t : {2.0, 3.0, 10.0}) {
    double lhs = fn.f(t);
    double rhs = t * fn.f(1.0 / t);
    if (std::abs(lhs - rhs) > 1e-10 * std::max(1.0, std::abs(lhs)))
      throw std::domain_error("monotone handle '" + fn.name + "': f(t) != t f(1/t) at t = " +
                              std::to_string(t));
  }
}

PriorSpec PriorSpec::qu(double u) {
  require_u(u);
  PriorSpec p;
  p.kind = PriorKind::QU;
  p.u = u;
  return p;
}

PriorSpec PriorSpec::kubo_mori(double u) {
  require_u(u);
  PriorSpec p;
  p.kind = PriorKind::KuboMori;
  p.u = u;
  return p;
}

PriorSpec PriorSpec::monotone(MonotoneFn fn) {
  check_monotone_symmetry(fn);
  PriorSpec p;
  p.kind = PriorKind::Monotone;
  p.f = std::move(fn);
  // Normalize 4 pi int_0^1 r^2 / (f((1-r)/(1+r)) sqrt(1-r^2) (1+r)) dr to 1.
  auto res = quad::tanh_sinh_01(
      [&](double r, double omr) {
        double opr = 2.0 - omr;
        return r * r / (p.f.f(omr / opr) * std::sqrt(omr * opr) * opr);
      },
      5e-12, 12);
  if (!res.converged)
    throw std::runtime_error("monotone prior normalization quadrature did not converge");
  p.normalization = 1.0 / (4.0 * kPi * res.value);
  return p;
}

double PriorSpec::jacobi_exponent() const {
  switch (kind) {
    case PriorKind::QU:
    case PriorKind::KuboMori:
      return u;
    case PriorKind::Monotone:
      return 0.5;
  }
  return 0.0;
}

double PriorSpec::radial_smooth(double r, double omr, double opr) const {
  switch (kind) {
    case PriorKind::QU:
      return qu_norm(u);
    case PriorKind::KuboMori:
      return kubo_norm(u) * log_ratio_over_r(r, omr, opr);
    case PriorKind::Monotone:
      return normalization / (f.f(omr / opr) * opr);
  }
  return 0.0;
}

double PriorSpec::radial_density(double r) const {
  return radial_density(r, 1.0 - r, 1.0 + r);
}

double PriorSpec::radial_density(double r, double omr, double opr) const {
  if (r < 0.0 || omr < 0.0) throw std::domain_error("radial_density: r outside [0, 1]");
  double a = jacobi_exponent();
  return radial_smooth(r, omr, opr) * std::pow(omr * opr, -a);
}

std::string PriorSpec::describe() const {
  switch (kind) {
    case PriorKind::QU:
      return "qu(u=" + std::to_string(u) + ")";
    case PriorKind::KuboMori:
      return "kubo(u=" + std::to_string(u) + ")";
    case PriorKind::Monotone:
      return "monotone(f=" + f.name + ")";
  }
  return "?";
}

double qu_norm(double u) {
  using specfun::log_gamma;
  return std::exp(log_gamma(2.5 - u) - log_gamma(1.0 - u)) / kPiPow32;
}

double qu_density(double u, const BlochState& s) {
  require_u(u);
  qstate::require_in_ball(s);
  double r2 = s.r2();
  if (u > 0.0 && r2 >= 1.0) throw std::domain_error("qu_density diverges at r = 1 for u > 0");
  return qu_norm(u) * std::pow(1.0 - r2, -u);
}

double sld_jeffreys_volume(const BlochState& s) { return qu_density(0.5, s); }

double sld_fisher_det(double r) {
  if (r < 0.0 || r >= 1.0) throw std::domain_error("sld_fisher_det: requires 0 <= r < 1");
  return 1.0 / ((1.0 - r) * (1.0 + r));
}

double kubo_mori_density(double u, double r, double theta) {
  require_u(u);
  if (!(r > 0.0) || !(r < 1.0))
    throw std::domain_error("kubo_mori_density: requires 0 < r < 1");
  double omr = 1.0 - r, opr = 1.0 + r;
  return kubo_norm(u) * r * log_ratio_over_r(r, omr, opr) * r * std::sin(theta) *
         std::pow(omr * opr, -u);
}

double monotone_volume_element(const MonotoneFn& fn, double r, double theta) {
  check_monotone_symmetry(fn);
  if (!(r > 0.0) || !(r < 1.0))
    throw std::domain_error("monotone_volume_element: requires 0 < r < 1");
  double omr = 1.0 - r, opr = 1.0 + r;
  return r * r * std::sin(theta) / (fn.f(omr / opr) * std::sqrt(omr * opr) * opr);
}

} // namespace qredux::priors
