#include "qredux/compress.hpp"

#include "qredux/entropy.hpp"
#include "qredux/spectrum.hpp"

#include <doctest.h>

#include <cmath>

using namespace qredux;

TEST_CASE("plan examples") {
  // a single maximally-spread qubit cannot be compressed
  auto p1 = compress::plan(1, 0.3, 0.1);
  CHECK(p1.included_levels == std::vector<int>{0});
  CHECK(p1.subspace_dim == 2);
  CHECK(p1.rate_qubits_per_signal == doctest::Approx(1.0).epsilon(1e-13));

  // n=2, u=0: spectrum {0.3 x3, 0.1 x1}
  auto p2 = compress::plan(2, 0.0, 0.15);
  CHECK(p2.included_levels == std::vector<int>{0});
  CHECK(p2.subspace_dim == 3);
  CHECK(p2.rate_qubits_per_signal == doctest::Approx(std::log2(3.0) / 2.0).epsilon(1e-13));
  CHECK(p2.prior_mass == doctest::Approx(0.9).epsilon(1e-12));

  auto p3 = compress::plan(2, 0.0, 0.05);
  CHECK(p3.included_levels == std::vector<int>{0, 1});
  CHECK(p3.subspace_dim == 4);
  CHECK(p3.rate_qubits_per_signal == doctest::Approx(1.0).epsilon(1e-13));

  CHECK_THROWS_AS(compress::plan(2, 0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(compress::plan(2, 0.0, 1.0), std::domain_error);
}

TEST_CASE("plans are minimal prefixes meeting the mass target") {
  for (int n : {3, 8, 17}) {
    for (double u : {-1.0, 0.0, 0.5}) {
      for (double eps : {0.01, 0.1, 0.4, 0.9}) {
        auto p = compress::plan(n, u, eps);
        CHECK(p.prior_mass >= 1.0 - eps);
        // prefix structure {0, 1, ..., k}
        for (std::size_t i = 0; i < p.included_levels.size(); ++i)
          REQUIRE(p.included_levels[i] == int(i));
        // minimality: dropping the last level goes below the target
        if (p.included_levels.size() > 1) {
          double without = p.prior_mass;
          auto s = spectrum::spectrum_qu(n, u);
          const auto& last = s.levels[p.included_levels.back()];
          without -= std::exp(specfun::log_big(last.multiplicity) + last.log_lambda);
          CHECK(without < 1.0 - eps);
        }
      }
    }
  }
}

TEST_CASE("rates are monotone in epsilon") {
  std::vector<double> eps;
  for (double e = 0.02; e < 1.0; e += 0.02) eps.push_back(e);
  for (int n : {2, 16, 64}) {
    auto curve = compress::rate_curve(n, 0.5, eps);
    for (std::size_t i = 1; i < curve.size(); ++i) {
      REQUIRE(curve[i - 1].rate >= curve[i].rate);
      REQUIRE(curve[i - 1].dim >= curve[i].dim);
    }
  }
}

TEST_CASE("compression happens at block length 64") {
  auto p = compress::plan(64, 0.5, 0.1);
  CHECK(p.rate_qubits_per_signal < 1.0);
  CHECK(p.prior_mass >= 0.9);
}

TEST_CASE("symmetric-subspace-only plans appear at the mass boundary") {
  const int n = 16;
  const double u = 0.5;
  auto s = spectrum::spectrum_qu(n, u);
  double lead = (n + 1) * s.levels[0].lambda;
  auto p = compress::plan(n, u, 1.0 - lead + 1e-9);
  CHECK(p.included_levels == std::vector<int>{0});
  CHECK(p.subspace_dim == n + 1);
  CHECK(p.rate_qubits_per_signal == doctest::Approx(std::log2(n + 1.0) / n).epsilon(1e-12));

  // epsilon -> 1: at least the leading level is always included
  auto pmin = compress::plan(n, u, 0.999999);
  CHECK(pmin.subspace_dim == n + 1);
}

TEST_CASE("retained weight") {
  auto p = compress::plan(2, 0.0, 0.15);
  CHECK(compress::retained_weight(p, 1.0) == 1.0);
  CHECK(compress::retained_weight(p, 0.0) == doctest::Approx(0.75).epsilon(1e-13));

  // full plan captures everything
  auto full = compress::plan(6, 0.3, 1e-9);
  for (double r : {0.0, 0.4, 1.0})
    CHECK(compress::retained_weight(full, r) == doctest::Approx(1.0).epsilon(1e-12));

  // bounded and monotone under adding levels
  for (double r : {0.0, 0.3, 0.9, 1.0}) {
    double prev = 0.0;
    for (double eps : {0.5, 0.2, 0.05, 0.01}) {
      auto q = compress::plan(8, 0.2, eps);
      double w = compress::retained_weight(q, r);
      REQUIRE(w >= prev - 1e-15);
      REQUIRE(w <= 1.0 + 1e-12);
      prev = w;
    }
  }
}
