#include "qredux/spectrum.hpp"

#include "qredux/quadrature.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace qredux::spectrum {

using specfun::binomial;
using specfun::log_gamma;

namespace {

constexpr double kLog2 = 0.69314718055994530942;
constexpr double kPi = 3.14159265358979323846;

void require_range(int n, double u, int h, const char* fn) {
  if (n < 1) throw std::domain_error(std::string(fn) + ": n must be >= 1");
  if (!(u < 1.0)) throw std::domain_error(std::string(fn) + ": u must be < 1");
  if (h < 0 || h > n / 2) throw std::domain_error(std::string(fn) + ": h outside [0, n/2]");
}

} // namespace

double SpectrumSummary::trace_error() const {
  quad::CompensatedSum acc;
  for (const auto& lv : levels) acc.add(std::exp(specfun::log_big(lv.multiplicity) + lv.log_lambda));
  return std::abs(acc.value() - 1.0);
}

BigInt SpectrumSummary::total_multiplicity() const {
  BigInt total = 0;
  for (const auto& lv : levels) total += lv.multiplicity;
  return total;
}

std::pair<double, double> eigenvalue(int n, double u, int h) {
  require_range(n, u, h, "eigenvalue");
  // assembled in extended precision: the individual log-gammas reach
  // ~n log n while the result is O(n), so double-rounding each term would
  // cost ~1e-11 absolute at n = 4096
  using specfun::detail::log_gamma_ld;
  const long double nl = n, ul = u, hl = h;
  const long double ln2 = 0.693147180559945309417232121458176568L;
  long double log_lambda = -nl * ln2 + log_gamma_ld(2.5L - ul) +
                           log_gamma_ld(2.0L + nl - hl - ul) + log_gamma_ld(1.0L + hl - ul) -
                           log_gamma_ld(2.5L + 0.5L * nl - ul) -
                           log_gamma_ld(2.0L + 0.5L * nl - ul) - log_gamma_ld(1.0L - ul);
  return {static_cast<double>(std::exp(log_lambda)), static_cast<double>(log_lambda)};
}

BigInt multiplicity(int n, int h) {
  if (n < 1 || h < 0 || h > n / 2) throw std::domain_error("multiplicity: h outside [0, n/2]");
  BigInt c = binomial(n + 1, h) * BigInt(n - 2 * h + 1) * BigInt(n - 2 * h + 1);
  return c / (n + 1);
}

BigInt ballot_count(int n, int h) {
  if (n < 1 || h < 0 || h > n / 2) throw std::domain_error("ballot_count: h outside [0, n/2]");
  return binomial(n + 1, h) * BigInt(n - 2 * h + 1) / (n + 1);
}

SpectrumSummary spectrum_qu(int n, double u) {
  require_range(n, u, 0, "spectrum_qu");
  SpectrumSummary s;
  s.n = n;
  s.levels.reserve(n / 2 + 1);
  for (int h = 0; h <= n / 2; ++h) {
    auto [lambda, log_lambda] = eigenvalue(n, u, h);
    s.levels.push_back(Level{h, lambda, log_lambda, multiplicity(n, h)});
  }
  return s;
}

CatalanCheck catalan_leading_eigenvalue_check(int n) {
  if (n < 1) throw std::domain_error("catalan_leading_eigenvalue_check: n must be >= 1");
  auto [lambda, log_lambda] = eigenvalue(n, 0.5, 0);
  double cat = std::exp(specfun::log_big(specfun::catalan(n + 1)) - 2.0 * n * kLog2);
  return CatalanCheck{lambda, cat};
}

std::vector<BallotPath> ballot_paths(int n, int h, std::size_t cap) {
  if (n < 1 || h < 0 || h > n / 2) throw std::domain_error("ballot_paths: h outside [0, n/2]");
  BigInt expected = ballot_count(n, h);
  if (expected > BigInt(static_cast<unsigned long long>(cap)))
    throw std::domain_error("ballot_paths: count exceeds cap");

  std::vector<BallotPath> out;
  std::vector<std::int8_t> steps(n);
  // Depth-first over step sequences, pruning below-axis prefixes.
  auto rec = [&](auto&& self, int pos, int height, int downs_used) -> void {
    if (pos == n) {
      BallotPath p;
      p.n = n;
      p.h = h;
      p.steps = steps;
      int ups_seen = 0;
      for (int k = 1; k <= n; ++k) {
        if (steps[k - 1] > 0) {
          if (ups_seen < h) p.up_labels |= qstate::element_bit(k, n);
          ++ups_seen;
        } else {
          p.down_labels |= qstate::element_bit(k, n);
        }
      }
      out.push_back(std::move(p));
      return;
    }
    // up-step
    if ((n - h) - (pos - downs_used) > 0) {
      steps[pos] = 1;
      self(self, pos + 1, height + 1, downs_used);
    }
    // down-step
    if (downs_used < h && height > 0) {
      steps[pos] = -1;
      self(self, pos + 1, height - 1, downs_used + 1);
    }
  };
  rec(rec, 0, 0, 0);
  return out;
}

SparseVec eigenvector(int n, int h, int s, std::uint32_t mask_a, std::uint32_t mask_b) {
  if (h < 0 || s < h || s > n - h) throw std::domain_error("eigenvector: need 0 <= h <= s <= n-h");
  if (std::popcount(mask_a) != h || std::popcount(mask_b) != h)
    throw std::domain_error("eigenvector: |A| and |B| must equal h");
  if (mask_a & mask_b) throw std::domain_error("eigenvector: A and B must be disjoint");
  const std::uint32_t full = qstate::full_mask(n);
  if ((mask_a | mask_b) & ~full) throw std::domain_error("eigenvector: masks beyond n");

  // Elements of A and B in decreasing element order (increasing bit value:
  // element k <-> bit n-k, so larger elements are lower bits).
  std::vector<std::uint32_t> a_desc, b_desc;
  for (int bit = 0; bit < n; ++bit) {
    std::uint32_t m = 1u << bit;
    if (mask_a & m) a_desc.push_back(m);
    if (mask_b & m) b_desc.push_back(m);
  }

  const std::uint32_t rest = full & ~(mask_a | mask_b);
  std::vector<std::uint32_t> rest_bits;
  for (int bit = 0; bit < n; ++bit)
    if (rest & (1u << bit)) rest_bits.push_back(1u << bit);
  const int want_y = s - h;

  // Y-candidates: all want_y-subsets of the rest.
  std::vector<std::uint32_t> ys;
  std::uint32_t sub = rest;
  while (true) {
    if (std::popcount(sub) == want_y) ys.push_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & rest;
  }

  SparseVec v;
  v.n = n;
  // X over subsets of A; X' removes from B the ranks present in X.
  std::uint32_t x = mask_a;
  while (true) {
    std::uint32_t xprime = mask_b;
    for (std::size_t i = 0; i < a_desc.size(); ++i)
      if (x & a_desc[i]) xprime &= ~b_desc[i];
    int sign = (std::popcount(x) % 2 == 0) ? 1 : -1;
    for (std::uint32_t y : ys) v.terms.emplace_back(x | xprime | y, sign);
    if (x == 0) break;
    x = (x - 1) & mask_a;
  }
  std::sort(v.terms.begin(), v.terms.end());
  return v;
}

std::vector<BasisVec> eigenbasis(int n, int cap) {
  if (n < 1 || n > cap) throw std::domain_error("eigenbasis: n outside [1, cap]");
  std::vector<BasisVec> basis;
  for (int h = 0; h <= n / 2; ++h) {
    auto paths = ballot_paths(n, h);
    for (const auto& p : paths)
      for (int s = h; s <= n - h; ++s)
        basis.push_back(BasisVec{h, s, p, eigenvector(n, h, s, p.up_labels, p.down_labels)});
  }
  return basis;
}

std::vector<GenLevel> generalized_eigenvalues(int n, double u,
                                              const std::function<double(int)>& f) {
  require_range(n, u, 0, "generalized_eigenvalues");
  for (int x = 1; x <= n; ++x)
    if (std::abs(f(x) - f(-x)) > 1e-12 * std::max(1.0, std::abs(f(x))))
      throw std::domain_error("generalized_eigenvalues: f is not symmetric");

  std::vector<GenLevel> out;
  for (int h = 0; h <= n / 2; ++h) {
    BigInt count = ballot_count(n, h);
    for (int s = h; s <= n - h; ++s) {
      double fval = f(n - 2 * s);
      double mag = std::exp(log_gamma(2.0 + n - h - u) + log_gamma(1.0 + h - u) -
                            log_gamma(2.0 + n - s - u) - log_gamma(2.0 + s - u) -
                            log_gamma(1.0 - u));
      out.push_back(GenLevel{h, s, fval * mag, count});
    }
  }
  return out;
}

SpectrumSummary spectrum_from_radial_prior(int n, const priors::PriorSpec& p, double tol) {
  if (n < 1) throw std::domain_error("spectrum_from_radial_prior: n must be >= 1");
  SpectrumSummary s;
  s.n = n;
  for (int h = 0; h <= n / 2; ++h) {
    // Integrand on [-1,1]: r (1+r)^{n-h+1} (1-r)^h w(|r|), evaluated with
    // node-carried endpoint distances. The 2^{-(n-1)} prefactor is folded
    // into ((1+r)/2)^{n-h+1} so large n cannot overflow the powers.
    auto res = quad::tanh_sinh(
        [&](double x, double omx, double opx) {
          double r = std::abs(x);
          double omr = (x >= 0.0) ? omx : opx;
          double opr = (x >= 0.0) ? opx : omx;
          double lp = (n - h + 1) * std::log(0.5 * opx);
          if (h > 0) lp += h * std::log(omx);
          return x * std::exp(lp) * p.radial_density(r, omr, opr);
        },
        tol, 11);
    if (!res.converged)
      throw std::runtime_error("spectrum_from_radial_prior: quadrature did not converge (h=" +
                               std::to_string(h) + ", estimate " +
                               std::to_string(res.error_estimate) + ")");
    double lambda = kPi * std::ldexp(1.0, 2 - h) / (n - 2 * h + 1) * res.value;
    Level lv;
    lv.h = h;
    lv.lambda = lambda;
    lv.log_lambda = std::log(lambda);
    lv.multiplicity = multiplicity(n, h);
    s.levels.push_back(std::move(lv));
  }
  return s;
}

} // namespace qredux::spectrum
