#include "qredux/quadrature.hpp"

#include "qredux/specfun.hpp"

#include <doctest.h>

#include <cmath>

using namespace qredux;

TEST_CASE("gauss-legendre integrates polynomials exactly") {
  auto rule = quad::gauss_legendre(8);
  // int_{-1}^{1} x^k dx
  for (int k = 0; k <= 15; ++k) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      acc += rule.weights[i] * std::pow(rule.nodes[i], k);
    double expect = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
    CHECK(std::abs(acc - expect) <= 1e-14);
  }
}

TEST_CASE("gauss-jacobi reproduces beta moments") {
  // int_{-1}^{1} (1-x)^a (1+x)^b x dx against closed forms via substitution
  // x = 2t - 1: first moment of the shifted beta distribution.
  for (double a : {-0.5, 0.0, 0.9}) {
    for (double b : {-0.3, 0.0, 1.5}) {
      auto rule = quad::gauss_jacobi(12, a, b);
      double m0 = 0.0, m1 = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        m0 += rule.weights[i];
        m1 += rule.weights[i] * rule.nodes[i];
      }
      using specfun::log_gamma;
      double mu0 = std::exp((a + b + 1.0) * std::log(2.0) + log_gamma(a + 1.0) +
                            log_gamma(b + 1.0) - log_gamma(a + b + 2.0));
      // E[x] under the Jacobi weight: (b - a) / (a + b + 2)
      CHECK(m0 == doctest::Approx(mu0).epsilon(1e-13));
      CHECK(m1 == doctest::Approx(mu0 * (b - a) / (a + b + 2.0)).epsilon(1e-12));
    }
  }
}

TEST_CASE("tanh-sinh handles endpoint singularities") {
  // int_{-1}^{1} dx = 2
  auto flat = quad::tanh_sinh([](double, double, double) { return 1.0; }, 1e-13);
  CHECK(flat.converged);
  CHECK(flat.value == doctest::Approx(2.0).epsilon(1e-13));

  // int_0^1 r^{-1/2} dr = 2 (singular at the left endpoint)
  auto sing = quad::tanh_sinh_01([](double r, double) { return 1.0 / std::sqrt(r); }, 1e-12);
  CHECK(sing.converged);
  CHECK(sing.value == doctest::Approx(2.0).epsilon(1e-11));

  // int_0^1 (1-r)^{-0.9} dr = 10: needs the analytic 1-r from the nodes
  auto heavy =
      quad::tanh_sinh_01([](double, double omr) { return std::pow(omr, -0.9); }, 1e-11);
  CHECK(heavy.converged);
  CHECK(heavy.value == doctest::Approx(10.0).epsilon(1e-9));

  // log singularity: int_0^1 log(1-r) dr = -1
  auto logs = quad::tanh_sinh_01([](double, double omr) { return std::log(omr); }, 1e-12);
  CHECK(logs.converged);
  CHECK(logs.value == doctest::Approx(-1.0).epsilon(1e-11));
}

TEST_CASE("compensated sum survives large cancellation") {
  quad::CompensatedSum acc;
  acc.add(1e16);
  for (int i = 0; i < 10; ++i) acc.add(1.0);
  acc.add(-1e16);
  CHECK(acc.value() == doctest::Approx(10.0).epsilon(1e-15));
}
