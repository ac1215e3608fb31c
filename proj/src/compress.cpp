#include "qredux/compress.hpp"

#include "qredux/entropy.hpp"
#include "qredux/spectrum.hpp"

#include <cmath>
#include <stdexcept>

namespace qredux::compress {

CompressionPlan plan(int n, double u, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::domain_error("plan: epsilon outside (0, 1)");
  const auto spec = spectrum::spectrum_qu(n, u);
  CompressionPlan p;
  p.n = n;
  p.u = u;
  p.epsilon = epsilon;
  p.subspace_dim = 0;
  // lambda_h is strictly decreasing in h, so dominance order is h-order.
  for (const auto& lv : spec.levels) {
    p.included_levels.push_back(lv.h);
    p.subspace_dim += lv.multiplicity;
    p.prior_mass += std::exp(specfun::log_big(lv.multiplicity) + lv.log_lambda);
    if (p.prior_mass >= 1.0 - epsilon) break;
  }
  p.rate_qubits_per_signal = specfun::log_big(p.subspace_dim) / (0.69314718055994530942 * n);
  return p;
}

double retained_weight(const CompressionPlan& p, double r) {
  double total = 0.0;
  for (int h : p.included_levels) total += entropy::level_weight(p.n, h, r);
  return total;
}

std::vector<RatePoint> rate_curve(int n, double u, const std::vector<double>& epsilons) {
  std::vector<RatePoint> out;
  out.reserve(epsilons.size());
  for (double eps : epsilons) {
    auto p = plan(n, u, eps);
    out.push_back(RatePoint{eps, p.rate_qubits_per_signal, p.prior_mass, p.subspace_dim});
  }
  return out;
}

} // namespace qredux::compress
