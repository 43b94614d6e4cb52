#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "fracriccati/errors.hpp"
#include "fracriccati/fracops.hpp"
#include "oracles.hpp"

using namespace fracriccati;

TEST_CASE("FracOrder and QuadratureSpec validation") {
  CHECK_THROWS_AS(FracOrder(0.0), DomainError);
  CHECK_THROWS_AS(FracOrder(1.2), DomainError);
  CHECK(FracOrder(1.0).is_classical());
  CHECK(FracOrder(0.25).applied_order() == 0.75);
  CHECK_THROWS_AS((QuadratureSpec{8, 1e-8, 6}.validate()), DomainError);
  CHECK_THROWS_AS((QuadratureSpec{64, 0.0, 6}.validate()), DomainError);
}

TEST_CASE("RealFunction builders") {
  const RealFunction p = RealFunction::polynomial({1.0, -2.0, 3.0});
  CHECK(p(2.0) == 9.0);
  CHECK(p.derivative(1, 2.0) == 10.0);
  CHECK(p.derivative(2, 2.0) == 6.0);
  CHECK(p.derivative(3, 2.0) == 0.0);
  CHECK(RealFunction::monomial(2.5).derivative(2, 4.0) == doctest::Approx(2.5 * 1.5 * 2.0));
  CHECK(RealFunction::sine().derivative(3, 0.0) == doctest::Approx(-1.0));
  CHECK(RealFunction::exponential().derivative(5, 1.0) == doctest::Approx(std::exp(1.0)));
  const RealFunction bare([](double x) { return x; });
  CHECK_FALSE(bare.has_derivatives());
  CHECK_THROWS_AS(bare.derivative(1, 1.0), DomainError);
}

TEST_CASE("sampled functions interpolate with a natural cubic spline") {
  std::vector<double> xs, ys;
  for (int i = 0; i <= 200; ++i) {
    xs.push_back(i * 0.02);
    ys.push_back(std::sin(xs.back()));
  }
  const RealFunction s = RealFunction::sampled(xs, ys);
  for (double x : {0.51, 1.337, 2.9}) {
    CHECK(s(x) == doctest::Approx(std::sin(x)).epsilon(1e-6));
    CHECK(s.derivative(1, x) == doctest::Approx(std::cos(x)).epsilon(1e-4));
  }
  const std::vector<double> line{0.0, 1.0, 2.0, 3.0};
  const std::vector<double> vals{1.0, 3.0, 5.0, 7.0};
  CHECK(RealFunction::sampled(line, vals)(1.7) == doctest::Approx(4.4).epsilon(1e-14));
  const std::vector<double> bad{0.0, 0.0, 1.0};
  CHECK_THROWS_AS(RealFunction::sampled(bad, vals), DomainError);
}

TEST_CASE("rl_integral against the substituted brute-force quadrature") {
  const std::vector<std::pair<RealFunction, std::function<double(double)>>> fs{
      {RealFunction::sine(), [](double t) { return std::sin(t); }},
      {RealFunction::exponential(), [](double t) { return std::exp(t); }},
      {RealFunction::monomial(0.5), [](double t) { return std::sqrt(t); }},
  };
  for (const auto& [f, plain] : fs) {
    for (double alpha : {0.2, 0.5, 0.8, 1.5}) {
      for (double x : {0.3, 1.0, 3.0}) {
        CAPTURE(alpha);
        CAPTURE(x);
        const double want = oracle::rl_integral_bruteforce(plain, alpha, x);
        CHECK(std::abs(fracops::rl_integral(f, alpha, x) - want) <= 1e-7 * std::max(1.0, std::abs(want)));
      }
    }
  }
  CHECK(fracops::rl_integral(RealFunction::sine(), 0.5, 0.0) == 0.0);
}

TEST_CASE("power rule matrix") {
  for (double a : {1.0, 2.0, 2.5}) {
    for (double beta : {0.3, 0.5, 0.7}) {
      for (double x : {0.5, 1.0, 4.0}) {
        const double want = std::tgamma(a + 1) / std::tgamma(a + 1 - beta) * std::pow(x, a - beta);
        CHECK(oracle::rel_err(fracops::power_rule(a, beta, x), want) < 1e-13);
        CHECK(oracle::rel_err(fracops::rl_derivative(RealFunction::monomial(a), beta, x), want) < 1e-6);
      }
    }
  }
  CHECK(fracops::power_rule(1.0, 2.0, 3.0) == 0.0);
  CHECK_THROWS_AS(fracops::power_rule(-1.0, 0.5, 1.0), DomainError);
}

TEST_CASE("integer and zero orders reduce to ordinary calculus") {
  const RealFunction f = RealFunction::sine();
  CHECK(fracops::rl_derivative(f, 0.0, 1.3) == doctest::Approx(std::sin(1.3)).epsilon(1e-12));
  CHECK(fracops::rl_derivative(f, 1.0, 1.3) == doctest::Approx(std::cos(1.3)).epsilon(1e-6));
  CHECK(fracops::rl_integral(f, 1.0, 1.3) == doctest::Approx(1.0 - std::cos(1.3)).epsilon(1e-8));
  CHECK_THROWS_AS(fracops::rl_derivative(f, 2.0, 1.0), DomainError);
  CHECK_THROWS_AS(fracops::rl_integral(f, 0.5, -1.0), DomainError);
}

TEST_CASE("derivatives of order in (1, 2)") {
  for (double beta : {1.2, 1.5}) {
    const double want = fracops::power_rule(3.0, beta, 2.0);
    CHECK(oracle::rel_err(fracops::rl_derivative(RealFunction::monomial(3.0), beta, 2.0), want) < 1e-5);
  }
}

TEST_CASE("frac_const") {
  for (double d : {0.25, 0.5, 0.9}) {
    for (double x : {0.5, 1.0, 4.0}) {
      CHECK(oracle::rel_err(fracops::frac_const(-2.0, FracOrder(d), x), -2.0 * std::pow(x, 1 - d) / std::tgamma(2 - d)) <
            1e-13);
    }
  }
  CHECK(fracops::frac_const(3.7, FracOrder(1.0), 2.0) == 3.7);
}

TEST_CASE("Leibniz and chain series are exact on polynomials") {
  const double x = 1.7;
  for (double beta : {0.3, 0.5, 0.8}) {
    // t^2 * t = t^3
    const auto lr = fracops::frac_leibniz(RealFunction::monomial(2.0), RealFunction::monomial(1.0), beta, x,
                                          SeriesSpec{3});
    CHECK(oracle::rel_err(lr.value, fracops::power_rule(3.0, beta, x)) < 1e-6);
    // h = t^3 composed from anything; the chain series only sees h and its derivatives
    const auto cr = fracops::frac_chain(RealFunction::monomial(3.0), beta, x, SeriesSpec{4});
    CHECK(oracle::rel_err(cr.value, fracops::power_rule(3.0, beta, x)) < 1e-13);
    CHECK(cr.last_term == 0.0);
    const auto more = fracops::frac_chain(RealFunction::monomial(3.0), beta, x, SeriesSpec{12});
    CHECK(oracle::rel_err(more.value, cr.value) < 1e-14);
  }
}

TEST_CASE("chain series converges on an entire function") {
  // D^β e^t = Σ x^{k-β}/Γ(k+1-β).
  double want = 0.0;
  for (int k = 0; k < 40; ++k) want += std::pow(1.2, k - 0.5) / std::tgamma(k + 0.5);
  const auto r = fracops::frac_chain(RealFunction::exponential(), 0.5, 1.2, SeriesSpec{25});
  CHECK(oracle::rel_err(r.value, want) < 1e-12);
  CHECK_FALSE(r.non_decaying);
}

TEST_CASE("linear fractional solver, classical case") {
  // u' + u = 2 with u(x0) = c: u = 2 + (c - 2) e^{-(x - x0)}.
  std::vector<double> xs;
  for (int i = 0; i <= 20; ++i) xs.push_back(0.5 + 0.1 * i);
  const auto u = fracops::solve_linear_fractional(RealFunction::constant(1.0), RealFunction::constant(2.0),
                                                  FracOrder(1.0), xs, 0.0);
  // μ = e^{x - x0}; ∫_0^x μ·2 ds = 2 e^{-x0}(e^x - 1).
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    const double mu = std::exp(x - 0.5);
    const double want = 2.0 * std::exp(-0.5) * (std::exp(x) - 1.0) / mu;
    CHECK(u[i] == doctest::Approx(want).epsilon(1e-9));
  }
}

TEST_CASE("linear fractional solver, fractional forcing") {
  // p = 0: u(x) = ∫_0^x D^{δ-1} g + c = D^{δ-2} g, which for g = 1 is x^{2-δ}/Γ(3-δ).
  std::vector<double> xs{0.5, 1.0, 2.0, 3.0};
  const double d = 0.5;
  const auto u = fracops::solve_linear_fractional(RealFunction::constant(0.0), RealFunction::constant(1.0),
                                                  FracOrder(d), xs, 0.0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(u[i] == doctest::Approx(std::pow(xs[i], 2 - d) / std::tgamma(3 - d)).epsilon(1e-7));
  }
  // g = sin t against the brute-force double integral D^{δ-2} sin.
  const auto v = fracops::solve_linear_fractional(RealFunction::constant(0.0), RealFunction::sine(), FracOrder(0.3),
                                                  xs, 0.0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double want = oracle::rl_integral_bruteforce([](double t) { return std::sin(t); }, 1.7, xs[i]);
    CHECK(v[i] == doctest::Approx(want).epsilon(1e-7));
  }
}

TEST_CASE("semigroup on monomials (property)") {
  oracle::Rng rng(3);
  for (int i = 0; i < 6; ++i) {
    const double a = rng.uniform(1.0, 3.0);
    const double alpha = rng.uniform(0.2, 0.8);
    const double beta = rng.uniform(0.2, 0.8);
    const double x = rng.uniform(0.5, 2.0);
    const RealFunction f = RealFunction::monomial(a);
    const RealFunction inner([&](double t) { return fracops::rl_integral(f, beta, t, QuadratureSpec{2048, 1e-8, 0}); });
    const double got = fracops::rl_integral(inner, alpha, x, QuadratureSpec{2048, 1e-8, 0});
    CHECK(std::abs(got - fracops::power_rule(a, -(alpha + beta), x)) < 1e-6 * std::max(1.0, got));
  }
}

TEST_CASE("quadrature reports non-convergence") {
  const RealFunction rough([](double t) { return std::sqrt(std::abs(std::sin(40 * t))); });
  CHECK_THROWS_AS(fracops::rl_integral(rough, 0.5, 3.0, QuadratureSpec{16, 1e-14, 1}), ConvergenceError);
}
