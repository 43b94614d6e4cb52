#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace fracriccati {

/// Regularity annotation carried alongside a function. Informational: the
/// operators do not branch on it.
enum class Continuity { C0, C1, C2, Smooth };

/// A real function on [0, X] with optional ordinary derivatives.
///
/// Derivatives come from an analytic supplier when one is given; sampled
/// functions fall back to the derivatives of their natural cubic spline.
class RealFunction {
 public:
  using Fn = std::function<double(double)>;
  /// (k, x) -> k-th ordinary derivative at x; k = 0 is the value.
  using DerivFn = std::function<double(int, double)>;

  explicit RealFunction(Fn f, Continuity cls = Continuity::C0);
  RealFunction(Fn f, DerivFn derivatives, Continuity cls = Continuity::Smooth);

  double operator()(double x) const { return f_(x); }

  /// k-th derivative. Throws DomainError when none is available.
  double derivative(int k, double x) const;
  bool has_derivatives() const { return static_cast<bool>(deriv_); }
  Continuity continuity() const { return cls_; }

  // Builtins with closed-form derivatives of every order.
  static RealFunction constant(double c);
  /// t^a for t >= 0.
  static RealFunction monomial(double a);
  /// c0 + c1 t + c2 t^2 + ...
  static RealFunction polynomial(std::vector<double> coeffs);
  static RealFunction sine();
  static RealFunction exponential();

  /// Natural cubic spline through (xs, ys); xs strictly increasing, >= 3 points.
  static RealFunction sampled(std::span<const double> xs, std::span<const double> ys);

 private:
  Fn f_;
  DerivFn deriv_;
  Continuity cls_;
};

}  // namespace fracriccati
