#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "fracriccati/errors.hpp"
#include "fracriccati/odeverify.hpp"
#include "fracriccati/riccati.hpp"

using namespace fracriccati;
using riccati::Branch;
using riccati::RiccatiParams;

TEST_CASE("adaptive integration reproduces cot") {
  const auto rp = RiccatiParams::make(1.0, -1.0, 1.0);
  std::vector<odeverify::StepRecord> trace;
  const double u = odeverify::integrate_riccati(rp, {0.3, 1.0 / std::tan(0.3), 2.8}, &trace);
  CHECK(u == doctest::Approx(1.0 / std::tan(2.8)).epsilon(1e-8));
  REQUIRE(!trace.empty());
  CHECK(trace.back().x == 2.8);
  for (const auto& s : trace) CHECK(s.error <= 1.0);
  for (std::size_t i = 1; i < trace.size(); ++i) CHECK(trace[i].x > trace[i - 1].x);
}

TEST_CASE("fixed steps show fifth-order convergence") {
  const auto rp = RiccatiParams::make(1.0, 1.0, 1.0);  // u = coth x
  const double x0 = 0.5, x1 = 2.0;
  const double exact = 1.0 / std::tanh(x1);
  double prev = 0.0;
  for (int steps : {10, 20, 40}) {
    const double err = std::abs(odeverify::integrate_riccati_fixed(rp, x0, 1.0 / std::tanh(x0), x1, steps) - exact);
    if (prev > 0.0) CHECK(prev / err >= 8.0);
    prev = err;
  }
}

TEST_CASE("a pole in the interval collapses the step") {
  const auto rp = RiccatiParams::make(1.0, -1.0, 1.0);
  CHECK_THROWS_AS(odeverify::integrate_riccati(rp, {1.0, 1.0 / std::tan(1.0), 4.0}), StepUnderflowError);
  odeverify::Tolerances tight;
  tight.max_steps = 5;
  CHECK_THROWS_AS(odeverify::integrate_riccati(rp, {0.3, 1.0 / std::tan(0.3), 2.8, tight}), ConvergenceError);
  CHECK_THROWS_AS(odeverify::integrate_riccati(rp, {2.0, 1.0, 1.0}), DomainError);
}

TEST_CASE("linear route") {
  // y'' = -y for a = 1, b = -1, δ = 1.
  const auto rp = RiccatiParams::make(1.0, -1.0, 1.0);
  const auto s = odeverify::integrate_linear(rp, {0.5, {std::sin(0.5), std::cos(0.5)}, 3.0});
  CHECK(s.y == doctest::Approx(std::sin(3.0)).epsilon(1e-8));
  CHECK(s.dy == doctest::Approx(std::cos(3.0)).epsilon(1e-8));

  // Fractional case against the closed-form y of branch 1.
  const auto fr = RiccatiParams::make(2.0, 1.0, 0.4);
  const auto y0 = riccati::eval_y_branch(fr, Branch::First, 0.5);
  const auto y1 = riccati::eval_y_branch(fr, Branch::First, 2.5);
  const auto end = odeverify::integrate_linear(fr, {0.5, {y0.y, y0.dy}, 2.5});
  CHECK(end.y == doctest::Approx(y1.y).epsilon(1e-8));
  CHECK(end.dy == doctest::Approx(y1.dy).epsilon(1e-8));
}

TEST_CASE("finite-difference derivative") {
  CHECK(odeverify::fd_derivative([](double x) { return std::sin(x); }, 1.0) ==
        doctest::Approx(std::cos(1.0)).epsilon(1e-9));
  CHECK(odeverify::fd_derivative([](double x) { return std::exp(x); }, 20.0) ==
        doctest::Approx(std::exp(20.0)).epsilon(1e-9));
}
