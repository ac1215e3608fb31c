#include "qredux/zeta.hpp"

#include "qredux/oracle.hpp"

#include <doctest.h>

#include <bit>
#include <cmath>
#include <random>
#include <vector>

using namespace qredux;

namespace {

// closed-form spectrum expanded to a descending multiset
std::vector<double> expand_spectrum(const spectrum::SpectrumSummary& s) {
  std::vector<double> out;
  for (const auto& lv : s.levels)
    for (specfun::BigInt i = 0; i < lv.multiplicity; ++i) out.push_back(lv.lambda);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

} // namespace

TEST_CASE("zeta entries: hand-evaluated values") {
  // single qubit: both diagonal entries are 1/2 for every u
  for (double u : {-3.0, -1.0, 0.0, 0.5, 0.99}) {
    CHECK(zeta::zeta_entry(1, u, 0, 0) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(zeta::zeta_entry(1, u, 1, 1) == doctest::Approx(0.5).epsilon(1e-13));
  }
  // n=2, u=0, I={1}, J={2} -> 1/10
  std::uint32_t m1 = qstate::element_bit(1, 2), m2 = qstate::element_bit(2, 2);
  CHECK(zeta::zeta_entry(2, 0.0, m1, m2) == doctest::Approx(0.1).epsilon(1e-13));
  // different cardinalities vanish identically
  CHECK(zeta::zeta_entry(2, 0.0, m1, 0) == 0.0);
  CHECK(zeta::zeta_entry(2, 0.0, qstate::full_mask(2), m2) == 0.0);
  CHECK_THROWS_AS(zeta::zeta_entry(2, 1.0, m1, m2), std::domain_error);
}

TEST_CASE("zeta middle block at n=2, u=0") {
  auto zm = zeta::zeta_matrix(2, 0.0);
  REQUIRE(zm.entries.has_value());
  CHECK(zm.trace_error <= 1e-12);
  // the |I| = 1 block is [[1/5, 1/10], [1/10, 1/5]] with eigenvalues 0.3, 0.1
  std::uint32_t r1 = qstate::subset_to_row(qstate::element_bit(1, 2), 2);
  std::uint32_t r2 = qstate::subset_to_row(qstate::element_bit(2, 2), 2);
  CHECK((*zm.entries)(r1, r1) == doctest::Approx(0.2).epsilon(1e-13));
  CHECK((*zm.entries)(r2, r2) == doctest::Approx(0.2).epsilon(1e-13));
  CHECK((*zm.entries)(r1, r2) == doctest::Approx(0.1).epsilon(1e-13));

  auto eig = oracle::dense_hermitian_eig(zm.entries->cast<std::complex<double>>());
  auto expect = expand_spectrum(zm.spectral);
  REQUIRE(expect.size() == 4);
  CHECK(expect[0] == doctest::Approx(0.3).epsilon(1e-13));
  CHECK(expect[3] == doctest::Approx(0.1).epsilon(1e-13));
  for (int i = 0; i < 4; ++i)
    CHECK(eig.eigenvalues(i) == doctest::Approx(expect[i]).epsilon(1e-12));
}

TEST_CASE("zeta n=1 is maximally mixed for any u") {
  for (double u : {-2.0, 0.3, 0.9}) {
    auto zm = zeta::zeta_matrix(1, u);
    CHECK((*zm.entries - zeta::RMatrix::Identity(2, 2) * 0.5).cwiseAbs().maxCoeff() <= 1e-13);
  }
}

TEST_CASE("zeta block structure and within-block dependence, exhaustive") {
  for (int n = 1; n <= 5; ++n) {
    const auto table = zeta::zeta_entry_table(n, 0.4);
    for (std::uint32_t i = 0; i <= qstate::full_mask(n); ++i) {
      for (std::uint32_t j = 0; j <= qstate::full_mask(n); ++j) {
        double v = zeta::zeta_entry(n, 0.4, i, j);
        int ci = std::popcount(i), cj = std::popcount(j);
        if (ci != cj) {
          REQUIRE(v == 0.0);
        } else {
          int imin = std::max(0, 2 * ci - n);
          REQUIRE(v == table[ci][std::popcount(i & j) - imin]);
        }
      }
    }
  }
}

TEST_CASE("zeta entries match the quadrature average of the tensor power") {
  for (int n = 1; n <= 3; ++n) {
    for (double u : {-1.0, 0.0, 0.5, 0.9}) {
      auto zm = zeta::zeta_matrix(n, u);
      auto avg = zeta::averaged_matrix(n, priors::PriorSpec::qu(u), 1e-9);
      CHECK(avg.converged);
      double dev = (avg.matrix.real() - *zm.entries).cwiseAbs().maxCoeff();
      double imag = avg.matrix.imag().cwiseAbs().maxCoeff();
      CHECK(dev <= 1e-8);
      CHECK(imag <= 1e-10);
    }
  }
}

TEST_CASE("averaged matrix basics") {
  auto id = zeta::averaged_matrix(1, priors::PriorSpec::qu(0.0), 1e-10);
  CHECK((id.matrix - qstate::CMatrix::Identity(2, 2) * 0.5).cwiseAbs().maxCoeff() <= 1e-10);
  CHECK(std::abs(id.matrix.trace().real() - 1.0) <= 1e-9);
}

TEST_CASE("averaged matrix under the kubo-mori prior matches the radial-prior spectrum") {
  auto prior = priors::PriorSpec::kubo_mori(0.5);
  auto avg = zeta::averaged_matrix(2, prior, 1e-9);
  CHECK(avg.converged);
  auto eig = oracle::dense_hermitian_eig(avg.matrix);
  auto spec = spectrum::spectrum_from_radial_prior(2, prior);
  auto expect = expand_spectrum(spec);
  for (int i = 0; i < 4; ++i)
    CHECK(eig.eigenvalues(i) == doctest::Approx(expect[i]).epsilon(1e-8));
}

TEST_CASE("eigenvector property against the dense matrix") {
  // every basis vector is an eigenvector of the dense zeta matrix
  for (int n : {2, 3, 4, 6}) {
    for (double u : {-1.0, 0.5}) {
      auto zm = zeta::zeta_matrix(n, u);
      auto basis = spectrum::eigenbasis(n);
      const std::int64_t dim = std::int64_t(1) << n;
      for (const auto& bv : basis) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
        for (auto [mask, coeff] : bv.vec.terms)
          v(qstate::subset_to_row(mask, n)) = double(coeff);
        Eigen::VectorXd lhs = (*zm.entries) * v;
        double lambda = zm.spectral.levels[bv.h].lambda;
        CHECK((lhs - lambda * v).cwiseAbs().maxCoeff() <= 1e-10);
      }
    }
  }
}

TEST_CASE("generalized matrix spectra match the closed form") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int n : {2, 3, 4}) {
    std::vector<double> tbl(n + 1);
    for (auto& t : tbl) t = dist(rng);
    auto f = [&tbl](int x) { return tbl[std::abs(x)]; };
    double u = 0.3;
    auto mat = zeta::generalized_matrix(n, u, f);
    auto eig = oracle::dense_hermitian_eig(mat.cast<std::complex<double>>());
    std::vector<double> expect;
    for (const auto& lv : spectrum::generalized_eigenvalues(n, u, f))
      for (specfun::BigInt i = 0; i < lv.multiplicity; ++i) expect.push_back(lv.lambda);
    REQUIRE(expect.size() == std::size_t(1) << n);
    std::sort(expect.begin(), expect.end(), std::greater<>());
    for (std::size_t i = 0; i < expect.size(); ++i)
      CHECK(eig.eigenvalues(Eigen::Index(i)) == doctest::Approx(expect[i]).epsilon(1e-10));
  }
}

TEST_CASE("generalized family reproduces the q_u matrix up to scale") {
  const int n = 3;
  const double u = 0.25;
  auto f = [&](int x) {
    using specfun::log_gamma;
    return std::exp(log_gamma(2.0 + 0.5 * n + 0.5 * x - u) +
                    log_gamma(2.0 + 0.5 * n - 0.5 * x - u));
  };
  auto tilde = zeta::generalized_matrix(n, u, f);
  auto zm = zeta::zeta_matrix(n, u);
  using specfun::log_gamma;
  double scale = std::exp(-n * std::log(2.0) + log_gamma(2.5 - u) -
                          log_gamma(2.5 + 0.5 * n - u) - log_gamma(2.0 + 0.5 * n - u));
  CHECK((scale * tilde - *zm.entries).cwiseAbs().maxCoeff() <= 1e-13);

  // spectra proportional: lambda_{h,s} * scale = lambda_h, independent of s
  auto gen = spectrum::generalized_eigenvalues(n, u, f);
  for (const auto& lv : gen) {
    double lambda_h = zm.spectral.levels[lv.h].lambda;
    CHECK(scale * lv.lambda == doctest::Approx(lambda_h).epsilon(1e-12));
  }
}

TEST_CASE("generalized matrix rejects asymmetric f") {
  auto bad = [](int x) { return double(x); };
  CHECK_THROWS_AS(zeta::generalized_matrix(2, 0.0, bad), std::domain_error);
  CHECK_THROWS_AS(spectrum::generalized_eigenvalues(2, 0.0, bad), std::domain_error);
}

TEST_CASE("serial and parallel zeta fills agree") {
  auto a = zeta::zeta_matrix(6, 0.7, Exec::Serial);
  auto b = zeta::zeta_matrix(6, 0.7, Exec::Parallel);
  CHECK((*a.entries - *b.entries).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("zeta caps and validation") {
  CHECK_THROWS_AS(zeta::zeta_matrix(13, 0.0), std::domain_error);
  CHECK_THROWS_AS(zeta::zeta_matrix(0, 0.0), std::domain_error);
  auto spec_only = zeta::zeta_spectral(64, 0.5);
  CHECK(!spec_only.entries.has_value());
  CHECK(spec_only.trace_error <= 1e-12);
}
