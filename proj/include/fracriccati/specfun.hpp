#pragma once

// Gamma, generalized binomial and real-order cylinder Bessel functions.
//
// All functions are pure; they throw the errors in errors.hpp instead of
// returning NaN.

namespace fracriccati::specfun {

/// Γ(x). Throws PoleError at x = 0, -1, -2, ...
double gamma(double x);

/// 1/Γ(x), defined everywhere; zero at the poles of Γ.
double rgamma(double x);

/// Γ(1+β) / (Γ(1+k) Γ(1-k+β)).
///
/// Returns 0 when only the denominator has a pole (for example an integer β
/// with k > β). Throws IndeterminateError when 1+β is itself a pole.
double gen_binomial(double beta, int k);

/// sin(πx) and cos(πx), exact at integers and half-integers.
double sin_pi(double x);
double cos_pi(double x);

enum class BesselKind { J, Y, I, K };

const char* to_string(BesselKind kind);

/// Cylinder Bessel function of real order `nu` at x > 0.
///
/// Throws DomainError for x <= 0 and OverflowError when I_nu(x) or a
/// second-kind value does not fit in a double.
double bessel(BesselKind kind, double nu, double x);

/// Like bessel(), but I is returned as e^{-x} I_nu(x) and K as e^{x} K_nu(x).
/// J and Y are returned unscaled. Ratios of same-kind values are unaffected by
/// the scaling, which keeps them finite for large x.
double bessel_scaled(BesselKind kind, double nu, double x);

struct BesselDerivative {
  double value;       // mean of the two forms below
  double lower_form;  // built from the order nu-1 neighbour
  double upper_form;  // built from the order nu+1 neighbour
};

/// d/dx of the Bessel function, computed through both neighbouring-order
/// recurrences. For J and Y:
///   lower: Z_{nu-1} - (nu/x) Z_nu      upper: (nu/x) Z_nu - Z_{nu+1}
/// with the sign changes appropriate to I and K.
BesselDerivative bessel_derivative(BesselKind kind, double nu, double x);

}  // namespace fracriccati::specfun
