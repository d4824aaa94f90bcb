#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mcmeasure/catalog.hpp"
#include "mcmeasure/error.hpp"
#include "mcmeasure/spectral.hpp"
#include "mcmeasure/tolerances.hpp"
#include "support.hpp"

#include <cmath>

using namespace mcmeasure;
using namespace testing_support;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::config;
}

Matrix m2(double a, double b, double c, double d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

Vector v2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

TransitionMatrix stochastic(const Matrix& m) { return TransitionMatrix(NonnegMatrix(m)); }

}  // namespace

TEST_CASE("validate_chain accepts the Cantor chain") {
  const MarkovChainSpec c = catalog::cantor();
  CHECK(c.ell() == 3);
  CHECK(c.irreducible());
  CHECK(c.live_block().states == std::vector<std::size_t>{0, 2});
}

TEST_CASE("validate_chain rejects bad input") {
  CHECK(code_of([] { validate_chain(2, v2(0.5, 0.5), m2(1, 0, 0, 1)); }) == Errc::degenerate_entry);
  CHECK(code_of([] { validate_chain(2, v2(0.5, 0.5), m2(0.5, 0.6, 0.5, 0.5)); }) == Errc::row_sum);
  CHECK(code_of([] { validate_chain(2, v2(0.5, 0.5), m2(1.5, -0.5, 0.5, 0.5)); }) == Errc::negative_entry);
  CHECK(code_of([] { validate_chain(2, v2(0.0, 0.0), m2(0.5, 0.5, 0.5, 0.5)); }) == Errc::zero_initial);
  CHECK(code_of([] { validate_chain(3, v2(0.5, 0.5), m2(0.5, 0.5, 0.5, 0.5)); }) ==
        Errc::dimension_mismatch);
  CHECK(code_of([] { validate_chain(2, v2(-0.1, 1.1), m2(0.5, 0.5, 0.5, 0.5)); }) ==
        Errc::negative_entry);
  CHECK(code_of([] { validate_chain(2, v2(NAN, 1.0), m2(0.5, 0.5, 0.5, 0.5)); }) == Errc::non_finite);
  CHECK(code_of([] { validate_chain(1, Vector::Ones(1), Matrix::Ones(1, 1)); }) ==
        Errc::dimension_mismatch);
}

TEST_CASE("row sums are checked at 1e-9") {
  CHECK_NOTHROW(validate_chain(2, v2(0.5, 0.5), m2(0.5, 0.5 + 5e-10, 0.5, 0.5)));
  CHECK_THROWS_AS(validate_chain(2, v2(0.5, 0.5), m2(0.5, 0.5 + 5e-9, 0.5, 0.5)), Error);
}

TEST_CASE("initial weights are rescaled to a distribution") {
  const MarkovChainSpec c = validate_chain(2, v2(2.0, 6.0), m2(0.5, 0.5, 0.5, 0.5));
  CHECK(c.initial()[0] == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("validate_chain records a reducible pattern") {
  CHECK(catalog::tukia(0.3).pattern_irreducible());
  const MarkovChainSpec r = validate_chain(3, Vector::Constant(3, 1.0 / 3), [] {
    Matrix m(3, 3);
    m << 0.5, 0.5, 0.0, 0.5, 0.5, 0.0, 0.2, 0.3, 0.5;
    return m;
  }());
  CHECK_FALSE(r.pattern_irreducible());
  CHECK_FALSE(r.irreducible());
  CHECK_THROWS_AS(r.require_irreducible(), Error);
}

TEST_CASE("elementwise_power keeps zeros for every q") {
  const MarkovChainSpec c = catalog::cantor();
  const TransitionMatrix& p = c.transition();
  const NonnegMatrix two = elementwise_power(p, 2.0);
  CHECK(two(0, 0) == doctest::Approx(0.25));
  CHECK(two(0, 1) == 0.0);
  CHECK(two(0, 2) == doctest::Approx(0.25));
  const NonnegMatrix inv = elementwise_power(p, -1.0);
  CHECK(inv(1, 0) == doctest::Approx(2.0));
  CHECK(inv(1, 1) == 0.0);
  CHECK(elementwise_power(p, 0.0)(2, 1) == 0.0);
  CHECK(elementwise_power(p, 0.0)(2, 2) == 1.0);
  CHECK(elementwise_power(p, 1.0).entries() == p.entries());
}

TEST_CASE("is_irreducible") {
  Pattern upper(2, 2);
  upper << true, true, false, true;
  CHECK_FALSE(is_irreducible(upper));
  CHECK(is_irreducible(catalog::three_state_nonmaximal().transition().pattern()));
  // Column 1 of the Cantor pattern is empty, so state 1 is never entered.
  CHECK_FALSE(is_irreducible(catalog::cantor().transition().pattern()));
  Pattern cycle(3, 3);
  cycle << false, true, false, false, false, true, true, false, false;
  CHECK(is_irreducible(cycle));
}

TEST_CASE("perron_root examples") {
  Matrix a(3, 3);
  a << 1, 1, 1, 1, 0, 1, 1, 0, 1;
  const SpectralTriple t = perron_root(NonnegMatrix(a));
  CHECK(t.lambda == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-13));
  CHECK(t.left.sum() == doctest::Approx(1.0));
  CHECK(t.right.sum() == doctest::Approx(1.0));
  CHECK((t.left.transpose() * a - t.lambda * t.left.transpose()).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((a * t.right - t.lambda * t.right).cwiseAbs().maxCoeff() < 1e-10);

  const SpectralTriple s = perron_root(catalog::three_state_nonmaximal().transition().base());
  CHECK(std::abs(s.lambda - 1.0) < 1e-12);
  for (Eigen::Index i = 0; i < 3; ++i) CHECK(s.right(i) == doctest::Approx(1.0 / 3).epsilon(1e-12));

  const SpectralTriple flip = perron_root(NonnegMatrix(m2(0, 1, 1, 0)));
  CHECK(std::abs(flip.lambda - 1.0) < 1e-12);
  CHECK(flip.right(0) == doctest::Approx(0.5));
}

TEST_CASE("perron_root rejects reducible input") {
  CHECK(code_of([] { perron_root(NonnegMatrix(m2(1, 1, 0, 1))); }) == Errc::not_irreducible);
  CHECK(code_of([] { perron_root(catalog::cantor().transition().base()); }) == Errc::not_irreducible);
}

TEST_CASE("perron_root handles a 1x1 matrix and tiny entries") {
  Matrix one(1, 1);
  one << 0.25;
  CHECK(perron_root(NonnegMatrix(one)).lambda == doctest::Approx(0.25));
  const MarkovChainSpec tukia = catalog::tukia(0.3);
  const NonnegMatrix tiny = elementwise_power(tukia.transition(), 20.0);
  const double expected = std::pow(0.7, 20) + std::pow(0.3, 20);
  CHECK(perron_root(tiny).lambda == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("perron_root agrees with a general eigen-solver on random matrices") {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 200; ++k) {
    const std::size_t ell = 2 + static_cast<std::size_t>(rng() % 6);
    Matrix a = random_stochastic(ell, rng, 0.4);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) *= 0.1 + 5.0 * uniform01(rng);
    }
    const SpectralTriple t = perron_root(NonnegMatrix(a));
    CHECK(t.lambda == doctest::Approx(eigen_spectral_radius(a)).epsilon(1e-10));
    CHECK((t.right.array() > 0.0).all());
    CHECK((t.left.array() > 0.0).all());
    CHECK((a * t.right - t.lambda * t.right).cwiseAbs().maxCoeff() < tolerance::kResidual);
  }
}

TEST_CASE("stationary_distribution examples") {
  const double a = 0.2;
  const double b = 0.4;
  const Distribution nu = stationary_distribution(stochastic(m2(1 - a, a, b, 1 - b)));
  CHECK(nu[0] == doctest::Approx(b / (a + b)).epsilon(1e-14));
  CHECK(nu[1] == doctest::Approx(a / (a + b)).epsilon(1e-14));

  const Distribution cantor = stationary_distribution(catalog::cantor().transition());
  CHECK(cantor[0] == doctest::Approx(0.5));
  CHECK(cantor[1] == 0.0);
  CHECK(cantor[2] == doctest::Approx(0.5));

  const Distribution flip = stationary_distribution(stochastic(m2(0, 1, 1, 0)));
  CHECK(flip[0] == doctest::Approx(0.5));
  CHECK(flip[1] == doctest::Approx(0.5));
}

TEST_CASE("stationary_distribution rejects several closed classes") {
  CHECK(code_of([] { stationary_distribution(stochastic(Matrix::Identity(2, 2))); }) ==
        Errc::not_irreducible);
}

TEST_CASE("perron_derivative examples") {
  // The Cantor chain lives on {0, 2} where P = ((1/2,1/2),(1/2,1/2)).
  const MarkovChainSpec cantor = catalog::cantor();
  const TransitionMatrix& live = cantor.live_block().transition;
  CHECK(perron_derivative(live, 1.0) == doctest::Approx(-std::log(2.0)).epsilon(1e-12));

  const std::vector<double> p{0.2, 0.3, 0.5};
  const MarkovChainSpec bc = catalog::bernoulli(p);
  const TransitionMatrix& bern = bc.transition();
  for (double q : {-2.0, 0.0, 1.5}) {
    double expected = 0.0;
    for (double x : p) expected += std::pow(x, q) * std::log(x);
    CHECK(perron_derivative(bern, q) == doctest::Approx(expected).epsilon(1e-11));
  }

  const std::vector<double> a{0.1, 0.3, 0.6};
  const MarkovChainSpec pc = catalog::permuted_rows(a, 5);
  const TransitionMatrix& perm = pc.transition();
  for (double q : {-1.0, 0.5, 3.0}) {
    double expected = 0.0;
    for (double x : a) expected += std::pow(x, q) * std::log(x);
    CHECK(perron_derivative(perm, q) == doctest::Approx(expected).epsilon(1e-11));
  }
}

TEST_CASE("property: zero pattern survives elementwise_power") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 100; ++k) {
    const TransitionMatrix p = stochastic(random_stochastic(2 + rng() % 6, rng, 0.4));
    for (double q : {-7.5, -1.0, 0.0, 0.3, 1.0, 4.0}) {
      CHECK((elementwise_power(p, q).pattern() == p.pattern()).all());
    }
  }
}

TEST_CASE("property: stochastic matrices have Perron root 1") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 100; ++k) {
    const TransitionMatrix p = stochastic(random_stochastic(2 + rng() % 8, rng, 0.3));
    CHECK(std::abs(perron_root(p.base()).lambda - 1.0) < 1e-12);
  }
}

TEST_CASE("property: lambda_q is log-convex") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 40; ++k) {
    const TransitionMatrix p = stochastic(random_stochastic(2 + rng() % 5, rng, 0.5));
    auto lambda = [&](double q) { return perron_root(elementwise_power(p, q)).lambda; };
    for (int trial = 0; trial < 10; ++trial) {
      const double q1 = -5.0 + 10.0 * uniform01(rng);
      const double q2 = q1 + 0.1 + 4.0 * uniform01(rng);
      const double t = 0.05 + 0.9 * uniform01(rng);
      const double lhs = lambda(t * q1 + (1 - t) * q2);
      const double rhs = std::pow(lambda(q1), t) * std::pow(lambda(q2), 1 - t);
      CHECK(lhs <= rhs + 1e-10);
    }
  }
}

TEST_CASE("property: stationary residual") {
  std::mt19937_64 rng(10);
  for (int k = 0; k < 100; ++k) {
    const TransitionMatrix p = stochastic(random_stochastic(2 + rng() % 8, rng, 0.3));
    const Vector nu = stationary_distribution(p).weights();
    CHECK((p.entries().transpose() * nu - nu).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("property: perron_derivative matches central differences") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 30; ++k) {
    const TransitionMatrix p = stochastic(random_stochastic(2 + rng() % 5, rng, 0.5));
    for (double q : {-3.0, -2.0, -1.0, 0.0, 1.0, 2.0, 3.0}) {
      const double h = 1e-5;
      const double fd = (perron_root(elementwise_power(p, q + h)).lambda -
                         perron_root(elementwise_power(p, q - h)).lambda) /
                        (2 * h);
      const double an = perron_derivative(p, q);
      CHECK(std::abs(an - fd) <= 1e-6 * std::abs(an));
    }
  }
}

TEST_CASE("perron_root resolves nearly tied eigenvalues") {
  // Second eigenvalue within 0.05% of the Perron root at this q.
  const MarkovChainSpec c = catalog::random_chain(4, 23, 0.4);
  const NonnegMatrix a = elementwise_power(c.live_block().transition, 5.3);
  const SpectralTriple t = perron_root(a);
  const Eigen::ArrayXd cw = (a.entries() * t.right).array() / t.right.array();
  CHECK((cw.maxCoeff() - cw.minCoeff()) / t.lambda < 1e-10);
  CHECK(cw.minCoeff() <= t.lambda * (1 + 1e-12));
  CHECK(cw.maxCoeff() >= t.lambda * (1 - 1e-12));
}

TEST_CASE("property: Collatz-Wielandt bracket over extreme q") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 60; ++k) {
    const TransitionMatrix p = stochastic(random_stochastic(2 + rng() % 7, rng, 0.4));
    for (double q = -40.0; q <= 40.0; q += 1.3) {
      const NonnegMatrix a = elementwise_power(p, q);
      const SpectralTriple t = perron_root(a);
      REQUIRE(std::isfinite(t.lambda));
      REQUIRE((t.right.array() > 0.0).all());
      const Eigen::ArrayXd cw = (a.entries() * t.right).array() / t.right.array();
      CHECK((cw.maxCoeff() - cw.minCoeff()) / t.lambda < 1e-9);
    }
  }
}
