#include "qredux/entropy.hpp"

#include "qredux/asymptotics.hpp"
#include "qredux/oracle.hpp"
#include "qredux/quadrature.hpp"
#include "qredux/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qredux::entropy {

using specfun::digamma;
using specfun::log_binomial;

namespace {

constexpr double kLog2 = 0.69314718055994530942;

void require_nr(int n, double r, const char* fn) {
  if (n < 1) throw std::domain_error(std::string(fn) + ": n must be >= 1");
  if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error(std::string(fn) + ": r outside [0, 1]");
}

// Weight exponents mix terms of order n log n; everything is assembled in
// extended precision so the sum rules (weights to 1, trace to 1) hold to
// ~1e-13 at n = 4096.
long double log_binomial_ld(int n, int k) {
  using specfun::detail::log_gamma_ld;
  return log_gamma_ld(n + 1.0L) - log_gamma_ld(k + 1.0L) - log_gamma_ld(n - k + 1.0L);
}

long double log_ballot(int n, int h) {
  return std::log((long double)(n - 2 * h + 1)) - std::log((long double)(n + 1)) +
         log_binomial_ld(n + 1, h);
}

long double log_multiplicity(int n, int h) {
  return 2.0L * std::log((long double)(n - 2 * h + 1)) - std::log((long double)(n + 1)) +
         log_binomial_ld(n + 1, h);
}

// log sinh(y), y > 0.
long double log_sinh(long double y) {
  const long double ln2 = 0.693147180559945309417232121458176568L;
  if (y < 1e-4L) return std::log(y) + std::log1p(y * y / 6.0L);
  return y + std::log1p(-std::exp(-2.0L * y)) - ln2;
}

// Sum with terms ordered by descending magnitude and Neumaier compensation.
double compensated_ordered_sum(std::vector<double> terms) {
  std::sort(terms.begin(), terms.end(),
            [](double a, double b) { return std::abs(a) > std::abs(b); });
  quad::CompensatedSum acc;
  for (double t : terms) acc.add(t);
  return acc.value();
}

} // namespace

double level_weight(int n, int h, double r) {
  require_nr(n, r, "level_weight");
  if (h < 0 || h > n / 2) throw std::domain_error("level_weight: h outside [0, n/2]");
  const long double ln2 = 0.693147180559945309417232121458176568L;
  if (r == 0.0)
    return static_cast<double>(std::exp(log_multiplicity(n, h) - n * ln2));
  if (r == 1.0) return h == 0 ? 1.0 : 0.0;
  const long double rl = r;
  const long double y = (n - 2 * h + 1) * std::atanh(rl);
  const long double lw = log_ballot(n, h) + 0.5L * (n + 1) * std::log1p(-rl * rl) +
                         log_sinh(y) - std::log(rl) - n * ln2;
  return static_cast<double>(std::exp(lw));
}

std::vector<double> level_weights(int n, double r) {
  std::vector<double> w(n / 2 + 1);
  for (int h = 0; h <= n / 2; ++h) w[h] = level_weight(n, h, r);
  return w;
}

std::vector<Rational> level_weights_exact(int n, const Rational& r) {
  if (n < 1 || n > 64) throw std::domain_error("level_weights_exact: n outside [1, 64]");
  using Int = boost::multiprecision::cpp_int;
  std::vector<Rational> w(n / 2 + 1);
  const Rational opr = 1 + r, omr = 1 - r;
  for (int h = 0; h <= n / 2; ++h) {
    Rational ballot(spectrum::ballot_count(n, h));
    if (r == 0) {
      w[h] = ballot * (n - 2 * h + 1) / Rational(Int(1) << n);
      continue;
    }
    auto rpow = [](const Rational& base, int e) {
      Rational acc = 1;
      for (int i = 0; i < e; ++i) acc *= base;
      return acc;
    };
    Rational bracket =
        rpow(opr, n + 1 - h) * rpow(omr, h) - rpow(opr, h) * rpow(omr, n + 1 - h);
    w[h] = ballot * bracket / (Rational(Int(1) << (n + 1)) * r);
  }
  return w;
}

double relative_entropy_exact(int n, double u, double r) {
  require_nr(n, r, "relative_entropy_exact");
  if (!(u < 1.0)) throw std::domain_error("relative_entropy_exact: u must be < 1");
  if (r == 1.0) return -spectrum::eigenvalue(n, u, 0).second;

  const double classical =
      0.5 * n * ((1.0 - r) * std::log(0.5 * (1.0 - r)) + (1.0 + r) * std::log(0.5 * (1.0 + r)));
  std::vector<double> terms(n / 2 + 1);
  for (int h = 0; h <= n / 2; ++h)
    terms[h] = level_weight(n, h, r) * spectrum::eigenvalue(n, u, h).second;
  return classical - compensated_ordered_sum(std::move(terms));
}

RedundancyReport redundancy_report(int n, double u, double r, bool with_asymptotic) {
  RedundancyReport rep;
  rep.n = n;
  rep.u = u;
  rep.r = r;
  rep.relative_entropy = relative_entropy_exact(n, u, r);
  rep.per_level_weights = level_weights(n, r);
  if (with_asymptotic) {
    auto av = (r == 1.0) ? asymptotics::boundary_asymptotic(u)
                         : asymptotics::redundancy_asymptotic(u, r);
    rep.asymptotic_value = av.value_at(n);
    rep.residual = rep.relative_entropy - *rep.asymptotic_value;
  }
  return rep;
}

double von_neumann_entropy_zeta(int n, double u) {
  if (n < 1) throw std::domain_error("von_neumann_entropy_zeta: n must be >= 1");
  if (!(u < 1.0)) throw std::domain_error("von_neumann_entropy_zeta: u must be < 1");
  std::vector<double> terms(n / 2 + 1);
  for (int h = 0; h <= n / 2; ++h) {
    const double ll = spectrum::eigenvalue(n, u, h).second;
    terms[h] = static_cast<double>(-std::exp(log_multiplicity(n, h) + (long double)ll) * ll);
  }
  return compensated_ordered_sum(std::move(terms));
}

double bayes_redundancy_exact(int n, double u) {
  if (!(u < 1.0)) throw std::domain_error("bayes_redundancy_exact: u must be < 1");
  const double linear =
      (-7.0 + 5.0 * u) / (2.0 * (2.0 - u) * (1.0 - u)) + digamma(5.0 - 2.0 * u) - digamma(1.0 - u);
  return -double(n) * linear + von_neumann_entropy_zeta(n, u);
}

OptimalityGap bayes_optimality_gap(const std::vector<double>& weights,
                                   const std::vector<qstate::CMatrix>& family,
                                   const qstate::CMatrix& Q) {
  if (weights.size() != family.size() || family.empty())
    throw std::domain_error("bayes_optimality_gap: weights and family sizes differ");
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::domain_error("bayes_optimality_gap: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-10)
    throw std::domain_error("bayes_optimality_gap: weights must sum to 1");
  const auto dim = Q.rows();
  for (const auto& P : family)
    if (P.rows() != dim || P.cols() != dim)
      throw std::domain_error("bayes_optimality_gap: dimension mismatch");

  qstate::CMatrix M = qstate::CMatrix::Zero(dim, dim);
  for (std::size_t i = 0; i < family.size(); ++i) M += weights[i] * family[i];

  OptimalityGap g;
  for (std::size_t i = 0; i < family.size(); ++i)
    g.average_risk_gap += weights[i] * (oracle::relative_entropy_dense(family[i], Q) -
                                        oracle::relative_entropy_dense(family[i], M));
  g.mixture_relative_entropy = oracle::relative_entropy_dense(M, Q);
  return g;
}

} // namespace qredux::entropy
