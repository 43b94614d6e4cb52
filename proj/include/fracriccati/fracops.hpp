#pragma once

// Riemann-Liouville operators with lower limit 0, the power-rule closed form,
// truncated fractional Leibniz and chain series, and the generalized
// first-order linear solver.

#include <span>
#include <vector>

#include "fracriccati/function.hpp"

namespace fracriccati {

/// The scheme parameter δ ∈ (0, 1]. The applied operator has order 1 - δ;
/// δ = 1 is ordinary calculus.
class FracOrder {
 public:
  explicit FracOrder(double delta);

  double delta() const { return delta_; }
  double applied_order() const { return 1.0 - delta_; }
  bool is_classical() const { return delta_ == 1.0; }

 private:
  double delta_;
};

/// Product-trapezoid quadrature control.
///
/// The mesh starts with `base_panels` panels and is doubled until two
/// successive results agree to `tol` (mixed absolute/relative, scale
/// max(1, |value|)). With `max_doublings == 0` a single mesh is used and no
/// convergence test is made, which gives a result that is a smooth function
/// of x (useful when the result is differentiated numerically).
struct QuadratureSpec {
  int base_panels = 4096;
  double tol = 1e-8;
  int max_doublings = 6;

  void validate() const;
};

/// Truncation order for the infinite Leibniz and chain sums.
struct SeriesSpec {
  int terms = 12;
};

namespace fracops {

/// (1/Γ(α)) ∫_0^x f(t) (x-t)^{α-1} dt.
///
/// The kernel is integrated exactly against the piecewise-linear interpolant
/// of f on a uniform mesh. Returns 0 at x = 0. Throws ConvergenceError when the doubling budget
/// runs out.
double rl_integral(const RealFunction& f, double alpha, double x, const QuadratureSpec& q = {});

/// d^n/dx^n of rl_integral(f, n - β, ·) at x, n = ceil(β), 0 <= β < 2.
///
/// The outer derivative is a central difference with one Richardson step,
/// h = max(1e-5, tol^{1/3} x) (capped at x/2). The mesh is held fixed across
/// the stencil and refined on the derivative value itself.
double rl_derivative(const RealFunction& f, double beta, double x, const QuadratureSpec& q = {});

/// Γ(a+1)/Γ(a+1-β) x^{a-β}: the exact Riemann-Liouville derivative of t^a.
/// A negative β gives the fractional integral of order -β. Returns 0 where
/// a+1-β is a non-positive integer (e.g. an integer derivative of a lower
/// degree monomial).
double power_rule(double a, double beta, double x);

/// b x^{1-δ} / Γ(2-δ): the order-(1-δ) integral of the constant b.
double frac_const(double b, FracOrder delta, double x);

struct SeriesResult {
  double value;
  /// |last term| of the truncated sum.
  double last_term;
  /// Set when |term_K| > |term_{K-1}|.
  bool non_decaying;
};

/// Σ_{k=0}^{K} C(β,k) f^{(k)}(x) D^{β-k} g(x). Orders β-k < 0 are fractional
/// integrals. f must supply ordinary derivatives.
SeriesResult frac_leibniz(const RealFunction& f, const RealFunction& g, double beta, double x,
                          const SeriesSpec& s = {}, const QuadratureSpec& q = {});

/// Σ_{k=0}^{K} C(β,k) x^{k-β}/Γ(1+k-β) h^{(k)}(x), with h the composite f∘g.
SeriesResult frac_chain(const RealFunction& h, double beta, double x, const SeriesSpec& s = {});

/// Solves u' + p u = D^{δ-1} g on the ascending grid xs (xs[0] > 0):
///
///   u(x) = (1/μ(x)) [ ∫_0^x μ(s) D^{δ-1} g(s) ds + c ],  μ(x) = exp(∫_{xs[0]}^x p).
///
/// μ is normalised to 1 at the first grid point; the outer integral starts
/// at the Riemann-Liouville lower limit 0.
std::vector<double> solve_linear_fractional(const RealFunction& p, const RealFunction& g, FracOrder delta,
                                            std::span<const double> xs, double c, const QuadratureSpec& q = {});

}  // namespace fracops
}  // namespace fracriccati
