#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "fracriccati/cosmo.hpp"
#include "fracriccati/errors.hpp"
#include "fracriccati/odeverify.hpp"
#include "oracles.hpp"

using namespace fracriccati;
using cosmo::CosmoParams;

TEST_CASE("parameter handling") {
  CHECK(cosmo::c_of_gamma(4.0 / 3.0) == doctest::Approx(1.0));
  CHECK(CosmoParams::make(std::nullopt, 4.0 / 3.0, 1, 0.5).c() == doctest::Approx(1.0));
  CHECK(CosmoParams::make(1.0, 4.0 / 3.0, 1, 0.5).c() == 1.0);
  CHECK_THROWS_AS(CosmoParams::make(1.0, 1.0, 1, 0.5), DomainError);
  CHECK_THROWS_AS(CosmoParams::make(std::nullopt, std::nullopt, 1, 0.5), DomainError);
  CHECK_THROWS_AS(CosmoParams::make(0.0, std::nullopt, 1, 0.5), cosmo::ZeroCouplingError);
  CHECK_THROWS_AS(CosmoParams::make(std::nullopt, 2.0 / 3.0, -1, 0.5), cosmo::ZeroCouplingError);
  CHECK_THROWS_AS(CosmoParams::make(1.0, std::nullopt, 2, 0.5), DomainError);
  const auto rp = CosmoParams::make(1.5, std::nullopt, 1, 0.5).riccati_params();
  CHECK(rp.a == 1.5);
  CHECK(rp.b == -1.5);
}

TEST_CASE("classical reductions") {
  for (double c : {0.5, 1.0, 2.0}) {
    const auto closed = CosmoParams::make(c, std::nullopt, 1, 1.0);
    const auto open = CosmoParams::make(c, std::nullopt, -1, 1.0);
    for (int i = 0; i < 100; ++i) {
      const double eta = 0.05 + (std::numbers::pi / (2 * c) - 0.05) * (i + 0.5) / 100;
      const double cot = 1.0 / std::tan(c * eta);
      CHECK(std::abs(cosmo::hubble(closed, eta).H - cot) <= 1e-8 * (1 + std::abs(cot)));
      const double e2 = 0.05 + 4.95 * (i + 0.5) / 100;
      const double coth = 1.0 / std::tanh(c * e2);
      CHECK(std::abs(cosmo::hubble(open, e2).H - coth) <= 1e-8 * (1 + coth));
    }
  }
}

TEST_CASE("Hubble residual and open-universe positivity (property)") {
  oracle::Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    const double c = rng.uniform(0.2, 2.5);
    const double d = rng.uniform(0.05, 1.0);
    const int k = rng.pick(2) ? 1 : -1;
    const double eta = rng.uniform(0.05, 4.0);
    const auto cp = CosmoParams::make(c, std::nullopt, k, d);
    const auto h = cosmo::hubble(cp, eta);
    if (k == -1) CHECK(h.H > 0.0);
    const auto poles = riccati::find_poles(cp.riccati_params(), 0.01, 4.1);
    bool near = false;
    for (double p : poles) near = near || std::abs(p - eta) < 0.05;
    if (near) continue;
    auto H = [&](double e) { return cosmo::hubble(cp, e).H; };
    const double forcing = -k * c * std::pow(eta, 1 - d) / std::tgamma(2 - d);
    CHECK(std::abs(odeverify::fd_derivative(H, eta) + c * h.H * h.H - forcing) <= 1e-6 * (1 + std::abs(forcing)));
  }
}

TEST_CASE("flat case") {
  const auto cp = CosmoParams::make(2.0, std::nullopt, 0, 0.3);
  const auto h = cosmo::hubble_any(cp, 4.0);
  CHECK(h.H == 0.125);
  CHECK_FALSE(h.delta_modified);
  CHECK_THROWS_AS(cosmo::hubble(cp, 1.0), DomainError);
  CHECK(cosmo::scale_factor(cp, 4.0, 1.0) == doctest::Approx(2.0));
}

TEST_CASE("scale factor") {
  oracle::Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    const int k = rng.pick(2) ? 1 : -1;
    const auto cp = CosmoParams::make(rng.uniform(0.3, 2.0), std::nullopt, k, rng.uniform(0.1, 1.0));
    const double e1 = rng.uniform(0.1, 1.0);
    const double e2 = rng.uniform(0.1, 1.0);
    double r12 = 0.0;
    try {
      r12 = cosmo::scale_factor(cp, e1, e2);
    } catch (const DomainError&) {
      continue;
    }
    CHECK(r12 * cosmo::scale_factor(cp, e2, e1) == doctest::Approx(1.0).epsilon(1e-10));
  }
  // R'/R = H: log-derivative of the ratio.
  const auto cp = CosmoParams::make(1.0, std::nullopt, -1, 0.6);
  auto logr = [&](double e) { return std::log(cosmo::scale_factor(cp, e, 1.0)); };
  CHECK(odeverify::fd_derivative(logr, 1.7) == doctest::Approx(cosmo::hubble(cp, 1.7).H).epsilon(1e-8));
  // k = 1, δ = 1: R ∝ sin(η), which vanishes at π.
  const auto closed = CosmoParams::make(1.0, std::nullopt, 1, 1.0);
  CHECK(cosmo::scale_factor(closed, 2.0, 1.0) == doctest::Approx(std::sin(2.0) / std::sin(1.0)));
  CHECK_THROWS_AS(cosmo::scale_factor(closed, 4.0, 1.0), DomainError);
  CHECK(cosmo::scale_factor(closed, 1.0, 1.0) == 1.0);
}
