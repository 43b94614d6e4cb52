#pragma once

// Independent check of the closed forms: adaptive Dormand-Prince 5(4)
// integration of the Riccati equation and of its associated linear equation,
// plus a Richardson-extrapolated central difference.

#include <functional>
#include <vector>

#include "fracriccati/riccati.hpp"

namespace fracriccati::odeverify {

struct Tolerances {
  double rel = 1e-9;
  double abs = 1e-12;
  long max_steps = 1'000'000;
};

struct IvpSpec {
  double x0;
  double u0;
  double x1;
  Tolerances tol{};
};

struct StepRecord {
  double x;
  double u;
  double h;
  double error;  // weighted RMS error estimate of the accepted step, <= 1
};

/// u(x1) for u' = b x^{1-δ}/Γ(2-δ) - a u^2, u(x0) = u0.
///
/// Throws StepUnderflowError when the step collapses (typically a pole in
/// [x0, x1]) and ConvergenceError when max_steps is exceeded. Accepted steps
/// are appended to `trace` when it is given.
double integrate_riccati(const riccati::RiccatiParams& rp, const IvpSpec& ivp,
                         std::vector<StepRecord>* trace = nullptr);

/// Fixed-step variant (fifth-order solution, no error control). Used to
/// observe the convergence order.
double integrate_riccati_fixed(const riccati::RiccatiParams& rp, double x0, double u0, double x1, int steps);

struct LinearState {
  double y;
  double dy;
};

struct LinearIvp {
  double x0;
  LinearState initial;
  double x1;
  Tolerances tol{};
};

/// (y, y') at x1 for y'' = (ab/Γ(2-δ)) x^{1-δ} y.
LinearState integrate_linear(const riccati::RiccatiParams& rp, const LinearIvp& ivp);

/// Central difference at x with h = max(1e-6, |x| 1e-6) and one Richardson
/// step. Error is O(h^4) plus roughly eps |f| / h of rounding.
double fd_derivative(const std::function<double(double)>& f, double x);

}  // namespace fracriccati::odeverify
