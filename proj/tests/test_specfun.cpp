#include "qredux/specfun.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace qredux::specfun;

namespace {
// Reference values computed with 30-digit arithmetic.
struct Ref {
  double x;
  double value;
};
} // namespace

TEST_CASE("log_gamma matches high-precision references") {
  const Ref refs[] = {
      {0.001, 6.9071788853838536825},   {0.01, 4.5994798780420217225},
      {0.1, 2.2527126517342059599},     {0.5, 0.57236494292470008707},
      {1.0, 0.0},                       {1.5, -0.12078223763524522235},
      {2.0, 0.0},                       {4.5, 2.4537365708424422205},
      {7.5, 7.5343642367587329552},     {12.0, 17.502307845873885839},
      {100.0, 359.13420536957539878},   {1234.5, 7550.5509010778948957},
      {1e5, 1051287.7089736568949},     {1e7, 151180949.36947391394},
  };
  for (const auto& ref : refs) {
    double got = log_gamma(ref.x);
    double tol = std::max(1e-13, 4e-16 * std::abs(ref.value));
    CHECK(std::abs(got - ref.value) <= tol);
  }
}

TEST_CASE("log_gamma examples") {
  CHECK(log_gamma(0.5) == doctest::Approx(0.5723649429).epsilon(1e-9));
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
  // product recurrence Gamma(x+1) = x Gamma(x) applied 7 times from 0.5
  double expect = log_gamma(0.5);
  for (int k = 0; k < 7; ++k) expect += std::log(0.5 + k);
  CHECK(std::abs(log_gamma(7.5) - expect) <= 1e-12);
}

TEST_CASE("log_gamma recurrence invariant on random points") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> dist(1e-9, 100.0);
  for (int i = 0; i < 1000; ++i) {
    double x = dist(rng);
    if (x <= 0.0) continue;
    CHECK(std::abs(log_gamma(x + 1.0) - log_gamma(x) - std::log(x)) <= 1e-12);
  }
}

TEST_CASE("log_gamma rejects non-positive arguments") {
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-3.2), std::domain_error);
}

TEST_CASE("digamma values and references") {
  CHECK(digamma(1.0) == doctest::Approx(-0.5772156649).epsilon(1e-9));
  CHECK(digamma(2.0) == doctest::Approx(1.0 - 0.5772156649015329).epsilon(1e-12));
  const Ref refs[] = {
      {0.001, -1000.5755719318103005}, {0.1, -10.423754940411076795},
      {0.5, -1.9635100260214234794},   {4.5, 1.3888709263595289015},
      {8.0, 2.0156414779556099965},    {100.0, 4.6001618527380874002},
      {1e5, 11.512920464961895087},
  };
  for (const auto& ref : refs)
    CHECK(std::abs(digamma(ref.x) - ref.value) <=
          std::max(1e-12, 2e-15 * std::abs(ref.value)));
  CHECK_THROWS_AS(digamma(0.0), std::domain_error);
}

TEST_CASE("digamma agrees with central differences of log_gamma") {
  // includes x = 4.5
  for (double x = 0.1; x <= 50.0; x += 0.7) {
    double h = 1e-5 * std::max(1.0, x);
    double fd = (log_gamma(x + h) - log_gamma(x - h)) / (2.0 * h);
    CHECK(std::abs(digamma(x) - fd) <= 1e-7 * std::max(1.0, std::abs(fd)));
  }
}

TEST_CASE("trigamma values and finite differences") {
  const double pi2 = 9.8696044010893586188;
  CHECK(trigamma(1.0) == doctest::Approx(pi2 / 6.0).epsilon(1e-13));
  CHECK(trigamma(2.0) == doctest::Approx(pi2 / 6.0 - 1.0).epsilon(1e-13));
  CHECK(trigamma(0.5) == doctest::Approx(pi2 / 2.0).epsilon(1e-13));
  const Ref refs[] = {
      {0.001, 1000001.642533195869}, {0.1, 101.43329915079275882},
      {4.5, 0.24872510303901037518}, {100.0, 0.010050166663333571395},
  };
  for (const auto& ref : refs)
    CHECK(std::abs(trigamma(ref.x) - ref.value) <=
          std::max(1e-12, 2e-15 * std::abs(ref.value)));
  for (double x = 0.1; x <= 50.0; x += 0.9) {
    double h = 1e-4 * std::max(1.0, x);
    double fd = (digamma(x + h) - digamma(x - h)) / (2.0 * h);
    CHECK(std::abs(trigamma(x) - fd) <= 1e-6 * std::max(1.0, std::abs(fd)));
  }
  CHECK_THROWS_AS(trigamma(-1.0), std::domain_error);
}

TEST_CASE("binomial exact values") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  // log-space agreement at large n
  double lg = log_binomial(2049, 1024);
  double lb = log_big(binomial(2049, 1024));
  CHECK(std::abs(lg - lb) <= 1e-10 * std::abs(lb));
}

TEST_CASE("binomial stays exact deep into the large-n range") {
  // row-sum identity sum_k C(n, k) = 2^n
  for (int n : {30, 64, 200}) {
    BigInt total = 0;
    for (int k = 0; k <= n; ++k) total += binomial(n, k);
    CHECK(total == BigInt(1) << n);
  }
  CHECK(binomial(4100, 2050) > 0);
}

TEST_CASE("catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  // recurrence C_{m+1} = sum_i C_i C_{m-i}
  std::vector<BigInt> c{1};
  for (int m = 0; m < 15; ++m) {
    BigInt next = 0;
    for (int i = 0; i <= m; ++i) next += c[i] * c[m - i];
    c.push_back(next);
  }
  for (int m = 0; m <= 15; ++m) CHECK(catalan(m) == c[m]);
  CHECK(catalan(10) == 16796);
}

TEST_CASE("eigenspace-count identity sums to a power of two") {
  // sum_{h=0}^{n+1} (n-2h+1)^2 C(n+1, h) = (n+1) 2^{n+1}
  for (int n = 1; n <= 30; ++n) {
    BigInt total = 0;
    for (int h = 0; h <= n + 1; ++h) {
      BigInt d(n - 2 * h + 1);
      total += d * d * binomial(n + 1, h);
    }
    CHECK(total == BigInt(n + 1) * (BigInt(1) << (n + 1)));
  }
}

TEST_CASE("terminating 2F1: examples") {
  auto r = gauss_2f1_terminating(-2, 1, 2);
  CHECK(r.direct == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(r.closed_form == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

  auto r0 = gauss_2f1_terminating(0, 3.7, 1.2);
  CHECK(r0.direct == 1.0);
  CHECK(r0.closed_form == 1.0);

  for (double b : {0.3, 2.0, -4.5}) {
    for (double c : {1.7, 5.0}) {
      auto r1 = gauss_2f1_terminating(-1, b, c);
      CHECK(r1.direct == doctest::Approx(1.0 - b / c).epsilon(1e-13));
      CHECK(r1.closed_form == doctest::Approx(1.0 - b / c).epsilon(1e-13));
    }
  }
}

TEST_CASE("terminating 2F1: closed form equals direct sum on random instances") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> mdist(0, 20);
  std::uniform_real_distribution<double> pdist(-5.0, 5.0);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    int m = mdist(rng);
    double b = pdist(rng);
    double c = pdist(rng);
    // keep away from denominator degeneracy
    bool bad = false;
    for (int k = 0; k < m; ++k)
      if (std::abs(c + k) < 0.05) bad = true;
    if (bad) continue;
    auto r = gauss_2f1_terminating(-double(m), b, c);
    double scale = std::max({1.0, std::abs(r.direct), std::abs(r.closed_form)});
    CHECK(std::abs(r.direct - r.closed_form) <= 1e-9 * scale);
    ++checked;
  }
  CHECK(checked > 800);
}

TEST_CASE("terminating 2F1: error signalling") {
  CHECK_THROWS_AS(gauss_2f1_terminating(0.5, 1.3, 2.0), std::domain_error);
  // (c)_k hits zero at k = 1 before termination at m = 3
  CHECK_THROWS_AS(gauss_2f1_terminating(-3, 1.0, -1.0), std::domain_error);
}
