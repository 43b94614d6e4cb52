#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/bessel_prime.hpp>
#include <cmath>
#include <numbers>

#include "fracriccati/errors.hpp"
#include "fracriccati/specfun.hpp"
#include "oracles.hpp"

namespace sf = fracriccati::specfun;
using sf::BesselKind;

TEST_CASE("gamma agrees with tgamma and satisfies the recurrence") {
  for (double x = 0.1; x <= 30.0; x += 0.0731) {
    CHECK(oracle::rel_err(sf::gamma(x), std::tgamma(x)) < 1e-13);
    CHECK(oracle::rel_err(sf::gamma(x + 1.0), x * sf::gamma(x)) < 1e-12);
  }
  for (double x : {-0.5, -1.5, -2.25, -7.3}) CHECK(oracle::rel_err(sf::gamma(x), std::tgamma(x)) < 1e-13);
  double factorial = 1.0;
  for (int n = 1; n <= 20; ++n) {
    factorial *= n;
    CHECK(sf::gamma(n + 1.0) == factorial);
  }
  CHECK(sf::gamma(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-15));
}

TEST_CASE("gamma poles") {
  for (double x : {0.0, -1.0, -2.0, -10.0}) {
    CHECK_THROWS_AS(sf::gamma(x), fracriccati::PoleError);
    CHECK(sf::rgamma(x) == 0.0);
  }
  CHECK(sf::rgamma(2.5) == doctest::Approx(1.0 / std::tgamma(2.5)).epsilon(1e-14));
}

TEST_CASE("generalized binomial") {
  for (double beta : {0.3, 0.5, 1.7, -0.4, 2.5}) {
    for (int k = 0; k <= 8; ++k) {
      const double want = oracle::binomial_falling(beta, k);
      CHECK(std::abs(sf::gen_binomial(beta, k) - want) <= 1e-13 * std::max(1.0, std::abs(want)));
    }
  }
  SUBCASE("symmetry for non-negative integer beta") {
    for (int beta = 0; beta <= 10; ++beta) {
      for (int k = 0; k <= beta; ++k) CHECK(sf::gen_binomial(beta, k) == doctest::Approx(sf::gen_binomial(beta, beta - k)));
      CHECK(sf::gen_binomial(beta, beta + 1) == 0.0);
    }
  }
  CHECK_THROWS_AS(sf::gen_binomial(-1.0, 2), fracriccati::IndeterminateError);
}

TEST_CASE("sin_pi and cos_pi are exact on the half-integer lattice") {
  for (int i = -8; i <= 8; ++i) {
    CHECK(sf::sin_pi(i) == 0.0);
    CHECK(sf::cos_pi(i + 0.5) == 0.0);
    CHECK(std::abs(sf::cos_pi(i)) == 1.0);
  }
  CHECK(sf::sin_pi(0.25) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
}

TEST_CASE("Bessel J and I against the ascending series") {
  for (double nu : {0.0, 1.0 / 3.0, 0.4, 0.5, 1.7, 2.0, 4.5}) {
    for (double x : {0.01, 0.1, 0.7, 1.9, 2.1, 5.0, 9.0}) {
      CAPTURE(nu);
      CAPTURE(x);
      const double j = oracle::bessel_series(nu, x, -1);
      CHECK(std::abs(sf::bessel(BesselKind::J, nu, x) - j) <= 1e-13 * std::max(std::abs(j), 1e-3));
      CHECK(oracle::rel_err(sf::bessel(BesselKind::I, nu, x), oracle::bessel_series(nu, x, +1)) < 1e-13);
    }
  }
}

TEST_CASE("Bessel J and Y against the Hankel expansion") {
  for (double nu : {0.25, 0.4, 0.5, 1.0, 1.7}) {
    for (double x : {30.0, 47.3, 80.0, 150.0}) {
      CAPTURE(nu);
      CAPTURE(x);
      const oracle::JY ref = oracle::bessel_asymptotic(nu, x);
      const double amp = std::sqrt(2.0 / (std::numbers::pi * x));
      CHECK(std::abs(sf::bessel(BesselKind::J, nu, x) - ref.j) < 1e-12 * amp);
      CHECK(std::abs(sf::bessel(BesselKind::Y, nu, x) - ref.y) < 1e-12 * amp);
    }
  }
}

TEST_CASE("Bessel functions against Boost") {
  oracle::Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    const double nu = rng.uniform(-1.7, 10.0);
    const double x = rng.log_uniform(0.01, 100.0);
    CAPTURE(nu);
    CAPTURE(x);
    const double j = boost::math::cyl_bessel_j(nu, x);
    const double y = boost::math::cyl_neumann(nu, x);
    const double amp = std::max(std::hypot(j, y), 1e-300);
    CHECK(std::abs(sf::bessel(BesselKind::J, nu, x) - j) <= 1e-12 * amp);
    CHECK(std::abs(sf::bessel(BesselKind::Y, nu, x) - y) <= 1e-12 * amp);
    if (x < 600) {
      CHECK(oracle::rel_err(sf::bessel(BesselKind::K, nu, x), boost::math::cyl_bessel_k(nu, x)) < 1e-12);
      if (nu >= 0) CHECK(oracle::rel_err(sf::bessel(BesselKind::I, nu, x), boost::math::cyl_bessel_i(nu, x)) < 1e-12);
    }
  }
}

TEST_CASE("integer orders of the second kind") {
  for (int n : {0, 1, 2, 5}) {
    for (double x : {0.05, 1.0, 3.3, 20.0}) {
      CHECK(oracle::rel_err(sf::bessel(BesselKind::Y, n, x), boost::math::cyl_neumann(n, x)) < 1e-11);
      CHECK(oracle::rel_err(sf::bessel(BesselKind::K, n, x), boost::math::cyl_bessel_k(n, x)) < 1e-12);
      CHECK(oracle::rel_err(sf::bessel(BesselKind::Y, -n, x), (n % 2 ? -1.0 : 1.0) * boost::math::cyl_neumann(n, x)) <
            1e-11);
    }
  }
}

TEST_CASE("scaled modified functions stay finite for large arguments") {
  for (double nu : {0.35, 0.5, 1.0}) {
    for (double x : {1.0, 50.0, 700.0, 5000.0}) {
      const double i = sf::bessel_scaled(BesselKind::I, nu, x);
      const double k = sf::bessel_scaled(BesselKind::K, nu, x);
      CHECK(std::isfinite(i));
      CHECK(std::isfinite(k));
      // e^{-x} I and e^{x} K both tend to 1/√(2πx) and (π/2x)^{1/2}.
      if (x >= 700) {
        CHECK(i * std::sqrt(2 * std::numbers::pi * x) == doctest::Approx(1.0).epsilon(1e-3));
        CHECK(k * std::sqrt(2 * x / std::numbers::pi) == doctest::Approx(1.0).epsilon(1e-3));
      }
    }
  }
  CHECK(sf::bessel_scaled(BesselKind::J, 0.5, 2.0) == sf::bessel(BesselKind::J, 0.5, 2.0));
  CHECK_THROWS_AS(sf::bessel(BesselKind::I, 0.5, 800.0), fracriccati::OverflowError);
}

TEST_CASE("Wronskians hold for random orders (property)") {
  oracle::Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const double nu = rng.uniform(0.0, 3.0);
    const double x = rng.log_uniform(0.05, 60.0);
    CAPTURE(nu);
    CAPTURE(x);
    const double j = sf::bessel(BesselKind::J, nu, x);
    const double y = sf::bessel(BesselKind::Y, nu, x);
    const double dj = sf::bessel_derivative(BesselKind::J, nu, x).value;
    const double dy = sf::bessel_derivative(BesselKind::Y, nu, x).value;
    CHECK(oracle::rel_err(j * dy - dj * y, 2.0 / (std::numbers::pi * x)) < 1e-9);
    if (x < 30) {
      const double iv = sf::bessel(BesselKind::I, nu, x);
      const double kv = sf::bessel(BesselKind::K, nu, x);
      const double di = sf::bessel_derivative(BesselKind::I, nu, x).value;
      const double dk = sf::bessel_derivative(BesselKind::K, nu, x).value;
      CHECK(oracle::rel_err(iv * dk - di * kv, -1.0 / x) < 1e-9);
    }
  }
}

TEST_CASE("derivative forms agree with Boost derivatives") {
  for (double nu : {0.3, 0.5, 1.7}) {
    for (double x : {0.2, 2.0, 15.0}) {
      const auto d = sf::bessel_derivative(BesselKind::J, nu, x);
      const double want = boost::math::cyl_bessel_j_prime(nu, x);
      CHECK(std::abs(d.value - want) < 1e-12);
      CHECK(std::abs(d.lower_form - d.upper_form) < 1e-12);
      const auto dk = sf::bessel_derivative(BesselKind::K, nu, x);
      CHECK(oracle::rel_err(dk.value, boost::math::cyl_bessel_k_prime(nu, x)) < 1e-12);
    }
  }
}

TEST_CASE("half-order closed forms") {
  for (double x = 0.1; x <= 50.0; x *= 1.37) {
    const double amp = std::sqrt(2.0 / (std::numbers::pi * x));
    CHECK(std::abs(sf::bessel(BesselKind::J, 0.5, x) - amp * std::sin(x)) < 1e-10 * amp);
    CHECK(std::abs(sf::bessel(BesselKind::J, -0.5, x) - amp * std::cos(x)) < 1e-10 * amp);
    CHECK(std::abs(sf::bessel(BesselKind::Y, 0.5, x) + amp * std::cos(x)) < 1e-10 * amp);
    CHECK(oracle::rel_err(sf::bessel(BesselKind::I, 0.5, x), amp * std::sinh(x)) < 1e-10);
    CHECK(oracle::rel_err(sf::bessel(BesselKind::I, -0.5, x), amp * std::cosh(x)) < 1e-10);
    CHECK(oracle::rel_err(sf::bessel(BesselKind::K, 0.5, x), std::sqrt(std::numbers::pi / (2 * x)) * std::exp(-x)) <
          1e-12);
  }
}

TEST_CASE("Bessel domain errors") {
  CHECK_THROWS_AS(sf::bessel(BesselKind::J, 0.5, 0.0), fracriccati::DomainError);
  CHECK_THROWS_AS(sf::bessel(BesselKind::K, 0.5, -1.0), fracriccati::DomainError);
  CHECK(std::string(sf::to_string(BesselKind::Y)) == "Y");
}
