#include "fracriccati/odeverify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "fracriccati/errors.hpp"

namespace fracriccati::odeverify {

namespace {

template <std::size_t N>
using State = std::array<double, N>;

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

template <std::size_t N>
struct StepResult {
  State<N> y;
  State<N> k_end;  // f(x+h, y_new), reused as k1 of the next step (FSAL)
  State<N> err;
};

template <std::size_t N, class Rhs>
StepResult<N> dp_step(const Rhs& f, double x, const State<N>& y, const State<N>& k1, double h) {
  auto combo = [&](std::initializer_list<std::pair<double, const State<N>*>> terms) {
    State<N> out = y;
    for (const auto& [w, k] : terms) {
      for (std::size_t i = 0; i < N; ++i) out[i] += h * w * (*k)[i];
    }
    return out;
  };
  const State<N> k2 = f(x + c2 * h, combo({{a21, &k1}}));
  const State<N> k3 = f(x + c3 * h, combo({{a31, &k1}, {a32, &k2}}));
  const State<N> k4 = f(x + c4 * h, combo({{a41, &k1}, {a42, &k2}, {a43, &k3}}));
  const State<N> k5 = f(x + c5 * h, combo({{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
  const State<N> k6 = f(x + h, combo({{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
  StepResult<N> r{};
  r.y = combo({{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
  r.k_end = f(x + h, r.y);
  for (std::size_t i = 0; i < N; ++i) {
    r.err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * r.k_end[i]);
  }
  return r;
}

template <std::size_t N>
double weighted_rms(const State<N>& err, const State<N>& y0, const State<N>& y1, const Tolerances& tol) {
  double acc = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    const double sc = tol.abs + tol.rel * std::max(std::abs(y0[i]), std::abs(y1[i]));
    acc += (err[i] / sc) * (err[i] / sc);
  }
  return std::sqrt(acc / N);
}

// Adaptive integration with the PI step-size controller of Hairer & Wanner.
template <std::size_t N, class Rhs, class Observer>
State<N> integrate_adaptive(const Rhs& f, double x0, State<N> y, double x1, const Tolerances& tol,
                            const Observer& observe) {
  if (!(x0 > 0.0) || !(x1 > x0)) throw DomainError("integrate: need 0 < x0 < x1");
  if (!(tol.rel > 0.0) || !(tol.abs > 0.0)) throw DomainError("integrate: tolerances must be positive");
  constexpr double kSafety = 0.9;
  constexpr double kBeta = 0.04;
  constexpr double kExpo = 0.2 - kBeta * 0.75;
  constexpr double kMinFactor = 0.2;
  constexpr double kMaxFactor = 10.0;

  double x = x0;
  State<N> k1 = f(x, y);
  double h = std::min(1e-3 * (x1 - x0), 1e-2);
  double err_old = 1e-4;
  bool rejected = false;
  for (long steps = 0; steps < tol.max_steps; ++steps) {
    if (x1 - x <= 16.0 * std::numeric_limits<double>::epsilon() * std::abs(x1)) return y;
    const bool last = x + h >= x1;
    if (last) h = x1 - x;
    if (h < 16.0 * std::numeric_limits<double>::epsilon() * std::abs(x)) {
      throw StepUnderflowError("integrate: step size underflow at x=" + std::to_string(x) +
                               " (pole or stiffness in the interval)");
    }
    const StepResult<N> r = dp_step<N>(f, x, y, k1, h);
    const double err = weighted_rms<N>(r.err, y, r.y, tol);
    if (!std::isfinite(err)) {
      h *= kMinFactor;
      rejected = true;
      continue;
    }
    const double fac11 = std::pow(err, kExpo);
    if (err <= 1.0) {
      double fac = fac11 / std::pow(err_old, kBeta) / kSafety;
      fac = std::clamp(fac, 1.0 / kMaxFactor, 1.0 / kMinFactor);
      double h_new = h / fac;
      if (rejected) h_new = std::min(h_new, h);
      err_old = std::max(err, 1e-4);
      x = last ? x1 : x + h;
      y = r.y;
      k1 = r.k_end;
      observe(x, y, h, err);
      if (last) return y;
      h = h_new;
      rejected = false;
    } else {
      h /= std::min(fac11 / kSafety, 1.0 / kMinFactor);
      rejected = true;
    }
  }
  throw ConvergenceError("integrate: maximum step count exceeded");
}

auto riccati_rhs(const riccati::RiccatiParams& rp) {
  return [rp](double x, const State<1>& u) { return State<1>{riccati::forcing(rp, x) - rp.a * u[0] * u[0]}; };
}

}  // namespace

double integrate_riccati(const riccati::RiccatiParams& rp, const IvpSpec& ivp, std::vector<StepRecord>* trace) {
  const auto rhs = riccati_rhs(rp);
  const State<1> end = integrate_adaptive<1>(rhs, ivp.x0, State<1>{ivp.u0}, ivp.x1, ivp.tol,
                                             [trace](double x, const State<1>& u, double h, double err) {
                                               if (trace) trace->push_back({x, u[0], h, err});
                                             });
  return end[0];
}

double integrate_riccati_fixed(const riccati::RiccatiParams& rp, double x0, double u0, double x1, int steps) {
  if (!(x0 > 0.0) || !(x1 > x0) || steps < 1) throw DomainError("integrate_riccati_fixed: bad interval or step count");
  const auto rhs = riccati_rhs(rp);
  const double h = (x1 - x0) / steps;
  State<1> u{u0};
  State<1> k1 = rhs(x0, u);
  for (int i = 0; i < steps; ++i) {
    const StepResult<1> r = dp_step<1>(rhs, x0 + i * h, u, k1, h);
    u = r.y;
    k1 = r.k_end;
  }
  return u[0];
}

LinearState integrate_linear(const riccati::RiccatiParams& rp, const LinearIvp& ivp) {
  const double kappa = rp.a * rp.b * specfun::rgamma(2.0 - rp.delta.delta());
  const double power = rp.delta.applied_order();
  auto rhs = [kappa, power](double x, const State<2>& s) {
    return State<2>{s[1], kappa * std::pow(x, power) * s[0]};
  };
  const State<2> end = integrate_adaptive<2>(rhs, ivp.x0, State<2>{ivp.initial.y, ivp.initial.dy}, ivp.x1, ivp.tol,
                                             [](double, const State<2>&, double, double) {});
  return {end[0], end[1]};
}

double fd_derivative(const std::function<double(double)>& f, double x) {
  const double h = std::max(1e-6, std::abs(x) * 1e-6);
  auto central = [&](double step) { return (f(x + step) - f(x - step)) / (2.0 * step); };
  return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

}  // namespace fracriccati::odeverify
