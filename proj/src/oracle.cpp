#include "qredux/oracle.hpp"

#include "qredux/quadrature.hpp"
#include "qredux/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace qredux::oracle {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_hermitian(const CMatrix& M, const char* fn) {
  if (M.rows() != M.cols()) throw std::domain_error(std::string(fn) + ": matrix not square");
  double scale = std::max(1e-300, M.cwiseAbs().maxCoeff());
  double dev = (M - M.adjoint()).cwiseAbs().maxCoeff();
  if (dev > 1e-10 * scale)
    throw std::domain_error(std::string(fn) + ": matrix not Hermitian (deviation " +
                            std::to_string(dev) + ")");
}

// Radial nodes as (r, weight) with the prior's full density folded in, so
// that sum_i w_i g(r_i) ~ int_0^1 g(r) r^2 w(r) dr.
std::vector<std::pair<double, double>> radial_nodes(const priors::PriorSpec& p,
                                                    QuadratureSpec::Radial rule, int order) {
  std::vector<std::pair<double, double>> out;
  switch (rule) {
    case QuadratureSpec::Radial::GaussJacobi: {
      // r = (1+t)/2 maps the r = 1 endpoint singularity onto the Jacobi
      // weight (1-t)^-a; the smooth (1+r)^-a remainder of (1-r^2)^-a stays
      // in the integrand: int_0^1 g (1-r^2)^-a dr
      //                    = 2^{a-1} sum w_i g(r_i) (1+r_i)^-a.
      double a = p.jacobi_exponent();
      auto rule_j = quad::gauss_jacobi(order, -a, 0.0);
      double scale = std::exp((a - 1.0) * 0.69314718055994530942);
      out.reserve(rule_j.nodes.size());
      for (std::size_t i = 0; i < rule_j.nodes.size(); ++i) {
        double t = rule_j.nodes[i];
        double r = 0.5 * (1.0 + t);
        double omr = 0.5 * (1.0 - t);
        double w = scale * rule_j.weights[i] * r * r * p.radial_smooth(r, omr, 1.0 + r) *
                   std::pow(1.0 + r, -a);
        out.emplace_back(r, w);
      }
      break;
    }
    case QuadratureSpec::Radial::GaussLegendre: {
      auto rule_l = quad::gauss_legendre(order);
      out.reserve(rule_l.nodes.size());
      for (std::size_t i = 0; i < rule_l.nodes.size(); ++i) {
        double r = 0.5 * (1.0 + rule_l.nodes[i]);
        double omr = 0.5 * (1.0 - rule_l.nodes[i]);
        double w = 0.5 * rule_l.weights[i] * r * r * p.radial_density(r, omr, 1.0 + r);
        out.emplace_back(r, w);
      }
      break;
    }
    case QuadratureSpec::Radial::TanhSinh: {
      // order is interpreted as a refinement level.
      for (const auto& nd : quad::tanh_sinh_nodes(order)) {
        double r = 0.5 * nd.one_plus_x;
        double omr = 0.5 * nd.one_minus_x;
        double w = 0.5 * nd.weight * r * r * p.radial_density(r, omr, 1.0 + r);
        out.emplace_back(r, w);
      }
      break;
    }
  }
  return out;
}

CMatrix ball_average_pass(const std::function<CMatrix(const qstate::BlochState&)>& integrand,
                          int dim, const priors::PriorSpec& p, QuadratureSpec::Radial rule,
                          int radial_order, int theta_order, int phi_order, Exec exec) {
  const auto rads = radial_nodes(p, rule, radial_order);
  const auto thetas = quad::gauss_legendre(theta_order); // in t = cos(theta)
  const double phi_w = 2.0 * kPi / phi_order;

  std::vector<CMatrix> partials(rads.size());
  const int nt = (exec == Exec::Parallel) ? max_threads() : 1;
#pragma omp parallel for schedule(dynamic) num_threads(nt) if (nt > 1)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(rads.size()); ++i) {
    const auto [r, rw] = rads[i];
    CMatrix acc = CMatrix::Zero(dim, dim);
    for (int j = 0; j < theta_order; ++j) {
      const double ct = thetas.nodes[j];
      const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
      const double tw = thetas.weights[j];
      for (int k = 0; k < phi_order; ++k) {
        const double phi = phi_w * k;
        qstate::BlochState s{r * st * std::cos(phi), r * st * std::sin(phi), r * ct};
        acc += (tw * phi_w) * integrand(s);
      }
    }
    partials[i] = rw * acc;
  }
  CMatrix total = CMatrix::Zero(dim, dim);
  for (const auto& m : partials) total += m; // fixed radial order: deterministic
  return total;
}

} // namespace

EigResult dense_hermitian_eig(const CMatrix& M) {
  require_hermitian(M, "dense_hermitian_eig");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(M);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("dense_hermitian_eig: eigensolver failed");
  const auto n = M.rows();
  EigResult res;
  res.eigenvalues.resize(n);
  res.eigenvectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) { // ascending -> descending
    res.eigenvalues(i) = es.eigenvalues()(n - 1 - i);
    res.eigenvectors.col(i) = es.eigenvectors().col(n - 1 - i);
  }
  return res;
}

CMatrix matrix_log_psd(const CMatrix& M, double cutoff) {
  auto eig = dense_hermitian_eig(M);
  const auto n = M.rows();
  Eigen::VectorXd logs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double lam = eig.eigenvalues(i);
    if (lam < -cutoff)
      throw std::domain_error("matrix_log_psd: negative eigenvalue " + std::to_string(lam));
    logs(i) = (lam > cutoff) ? std::log(lam) : 0.0;
  }
  return eig.eigenvectors * logs.asDiagonal() * eig.eigenvectors.adjoint();
}

double relative_entropy_dense(const CMatrix& rho1, const CMatrix& rho2, double cutoff) {
  require_hermitian(rho1, "relative_entropy_dense");
  require_hermitian(rho2, "relative_entropy_dense");
  if (rho1.rows() != rho2.rows())
    throw std::domain_error("relative_entropy_dense: dimension mismatch");
  auto e1 = dense_hermitian_eig(rho1);
  auto e2 = dense_hermitian_eig(rho2);

  // Support check: mass of rho1 on the null directions of rho2.
  double null_mass = 0.0;
  for (Eigen::Index j = 0; j < rho2.rows(); ++j) {
    if (e2.eigenvalues(j) > cutoff) continue;
    const auto v = e2.eigenvectors.col(j);
    null_mass += std::real((v.adjoint() * rho1 * v)(0, 0));
  }
  if (null_mass > cutoff * rho1.rows())
    throw std::domain_error("relative_entropy_dense: rho1 has support outside supp(rho2)");

  double term1 = 0.0;
  for (Eigen::Index i = 0; i < rho1.rows(); ++i) {
    double lam = e1.eigenvalues(i);
    if (lam > cutoff) term1 += lam * std::log(lam);
  }
  double term2 = 0.0;
  for (Eigen::Index j = 0; j < rho2.rows(); ++j) {
    double mu = e2.eigenvalues(j);
    if (mu <= cutoff) continue;
    const auto v = e2.eigenvectors.col(j);
    term2 += std::log(mu) * std::real((v.adjoint() * rho1 * v)(0, 0));
  }
  return term1 - term2;
}

double von_neumann_entropy_dense(const CMatrix& rho, double cutoff) {
  auto eig = dense_hermitian_eig(rho);
  double s = 0.0;
  for (Eigen::Index i = 0; i < rho.rows(); ++i) {
    double lam = eig.eigenvalues(i);
    if (lam > cutoff) s -= lam * std::log(lam);
  }
  return s;
}

CMatrix kron(const CMatrix& A, const CMatrix& B) {
  CMatrix out(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return out;
}

BallAverageResult ball_average(const std::function<CMatrix(const qstate::BlochState&)>& integrand,
                               int dim, const priors::PriorSpec& p, const QuadratureSpec& spec,
                               Exec exec) {
  const bool de = spec.radial_rule == QuadratureSpec::Radial::TanhSinh;
  const int r0 = de ? std::min(spec.radial_order, 9) : spec.radial_order;
  const int t1 = spec.refine_angular ? 2 * spec.theta_order : spec.theta_order;
  const int p1 = spec.refine_angular ? 2 * spec.phi_order : spec.phi_order;
  CMatrix coarse = ball_average_pass(integrand, dim, p, spec.radial_rule, r0, spec.theta_order,
                                     spec.phi_order, exec);
  CMatrix fine =
      ball_average_pass(integrand, dim, p, spec.radial_rule, de ? r0 + 1 : 2 * r0, t1, p1, exec);
  BallAverageResult res;
  res.error_estimate = (fine - coarse).cwiseAbs().maxCoeff();
  res.converged = res.error_estimate <= spec.tolerance;
  res.matrix = std::move(fine);
  res.coarse_matrix = std::move(coarse);
  return res;
}

IntegralCheckReport standard_integral_check() {
  IntegralCheckReport rep;
  auto push = [&rep](const std::string& name, double dev) {
    rep.items.push_back({name, dev});
    rep.max_deviation = std::max(rep.max_deviation, std::abs(dev));
  };

  auto double_factorial = [](int m) {
    double acc = 1.0;
    for (int v = m; v >= 2; v -= 2) acc *= v;
    return acc;
  };

  // Angular moments int_0^pi sin^a cos^b via Gauss-Jacobi in t = cos(theta):
  // sin^a = (1-t^2)^{a/2}, measure dtheta = dt / sin(theta).
  auto theta_moment = [](int a, int b) {
    // (1-t^2)^{(a-1)/2} t^b dt; Jacobi exponent (a-1)/2 on both ends.
    double alpha = 0.5 * (a - 1);
    auto rule = quad::gauss_jacobi(48, alpha, alpha);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      acc += rule.weights[i] * std::pow(rule.nodes[i], b);
    return acc;
  };

  for (int M : {0, 1, 2, 3}) {
    for (int N : {0, 1, 2, 3}) {
      double even = theta_moment(2 * M, 2 * N);
      double rhs = kPi * double_factorial(2 * M - 1) * double_factorial(2 * N - 1) /
                   double_factorial(2 * M + 2 * N);
      push("theta-even-even M=" + std::to_string(M) + " N=" + std::to_string(N), even - rhs);

      double odd_sin = theta_moment(2 * M + 1, 2 * N);
      double rhs_b = 2.0 * double_factorial(2 * M) * double_factorial(2 * N - 1) /
                     double_factorial(2 * M + 2 * N + 1);
      push("theta-odd-even M=" + std::to_string(M) + " N=" + std::to_string(N), odd_sin - rhs_b);

      push("theta-even-odd M=" + std::to_string(M) + " N=" + std::to_string(N),
           theta_moment(2 * M, 2 * N + 1));
      push("theta-odd-odd M=" + std::to_string(M) + " N=" + std::to_string(N),
           theta_moment(2 * M + 1, 2 * N + 1));
    }
  }

  // Full-circle vanishing moment: int_0^{2pi} sin^{2M+1} cos^{2N} = 0.
  for (int M : {0, 1}) {
    for (int N : {0, 1}) {
      int r = 256;
      double acc = 0.0;
      for (int k = 0; k < r; ++k) {
        double phi = 2.0 * kPi * k / r;
        acc += std::pow(std::sin(phi), 2 * M + 1) * std::pow(std::cos(phi), 2 * N);
      }
      push("circle-odd-even M=" + std::to_string(M) + " N=" + std::to_string(N),
           acc * 2.0 * kPi / r);
    }
  }

  // Beta integral int_0^1 r^m (1-r^2)^-u dr = Gamma((m+1)/2) Gamma(1-u)
  //                                           / (2 Gamma((m+3)/2 - u)).
  using specfun::log_gamma;
  for (int m : {0, 1, 2, 3, 5, 8}) {
    for (double u : {-1.5, -0.5, 0.0, 0.3, 0.7}) {
      auto rule = quad::gauss_jacobi(48, -u, 0.0);
      double acc = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        double r = 0.5 * (1.0 + rule.nodes[i]);
        acc += rule.weights[i] * std::pow(r, m) * std::pow(1.0 + r, -u);
      }
      acc *= std::exp((u - 1.0) * 0.69314718055994530942);
      double rhs = std::exp(log_gamma(0.5 * (m + 1)) + log_gamma(1.0 - u) -
                            log_gamma(0.5 * (m + 3) - u)) /
                   2.0;
      push("beta-integral m=" + std::to_string(m) + " u=" + std::to_string(u), acc - rhs);
    }
  }
  return rep;
}

} // namespace qredux::oracle
