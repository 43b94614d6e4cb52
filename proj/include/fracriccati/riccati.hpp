#pragma once

// Closed-form solutions of the δ-modified Riccati equation
//
//   u'(x) + a u(x)^2 = b x^{1-δ} / Γ(2-δ),   x > 0,
//
// through the linearisation u = y'/(a y), y'' = (ab/Γ(2-δ)) x^{1-δ} y, whose
// solutions are y = √x Z_n(q x^r) with n = 1/(3-δ), r = (3-δ)/2.

#include <vector>

#include "fracriccati/fracops.hpp"
#include "fracriccati/specfun.hpp"

namespace fracriccati::riccati {

struct RiccatiParams {
  double a;
  double b;
  FracOrder delta;

  /// Validates a != 0 and finiteness.
  static RiccatiParams make(double a, double b, double delta);
};

/// Sign structure of the associated linear equation: J/Y when ab < 0, I/K
/// when ab > 0, no Bessel form when b = 0.
enum class Regime { Oscillatory, Modified, Degenerate };

enum class Branch { First = 1, Second = 2 };

const char* to_string(Regime regime);

struct BesselMap {
  double p;      // always 1/2
  double q_mag;  // (2/(3-δ)) √(|ab| / Γ(2-δ))
  double r;      // (3-δ)/2
  double n;      // 1/(3-δ)
  Regime regime;

  /// Bessel kind used by a branch in this regime (J/Y or I/K).
  specfun::BesselKind kind(Branch branch) const;
};

BesselMap map_params(const RiccatiParams& rp);

struct SolutionEval {
  double value;  // NaN when `pole` is set
  bool pole;
  double denominator_magnitude;
};

/// Branch 1 (J or I): u = (1/a) q r x^{r-1} B_{n-1}(q x^r) / B_n(q x^r).
SolutionEval eval_u1(const RiccatiParams& rp, double x);
/// Branch 2 (Y or K). In the modified regime the K recurrence flips the sign
/// of the ratio.
SolutionEval eval_u2(const RiccatiParams& rp, double x);
SolutionEval eval_u(const RiccatiParams& rp, Branch branch, double x);

struct YBranch {
  double y;
  double dy;      // from the order n-1 recurrence (the p - nr = 0 form)
  double dy_alt;  // from the order n+1 recurrence, cross-check
};

/// y = √x B_n(q x^r) and y' of the chosen branch.
YBranch eval_y_branch(const RiccatiParams& rp, Branch branch, double x);

/// b x^{1-δ}/Γ(2-δ), the right-hand side of the equation.
double forcing(const RiccatiParams& rp, double x);

/// u' + a u^2 - forcing(x).
double residual(const RiccatiParams& rp, double x, double u, double u_prime);

/// Zeros of the branch denominator B_n(q x^r) in [x_lo, x_hi], ascending.
/// Empty in the modified regime (I_n and K_n have no positive zeros).
std::vector<double> find_poles(const RiccatiParams& rp, double x_lo, double x_hi, Branch branch = Branch::First);

/// Relative pole threshold: |B_n| < kPoleThreshold (|B_{n-1}| + 1).
inline constexpr double kPoleThreshold = 1e-12;

}  // namespace fracriccati::riccati
