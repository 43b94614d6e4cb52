#pragma once

// Table builders behind the command-line tool. Each returns the table the
// corresponding subcommand prints, so the tool itself only parses flags.

#include <optional>
#include <string>
#include <vector>

#include "fracriccati/cosmo.hpp"
#include "fracriccati/errors.hpp"
#include "fracriccati/fracops.hpp"
#include "fracriccati/riccati.hpp"
#include "fracriccati/table.hpp"

namespace fracriccati::cli {

/// Input of `fracderiv`: a monomial t^a or a builtin (sin, exp, poly:c0,c1,...).
class FunctionSource {
 public:
  static FunctionSource power(double a);
  /// Throws DomainError for unknown names or malformed coefficient lists.
  static FunctionSource builtin(const std::string& spec);

  RealFunction function() const;
  /// Exact D^β of the source at x, summed term by term from the power rule
  /// over its Taylor series. Defined for every source here.
  double oracle(double beta, double x) const;

 private:
  enum class Kind { Power, Sine, Exp, Poly };
  FunctionSource(Kind kind, double a, std::vector<double> coeffs) : kind_(kind), a_(a), coeffs_(std::move(coeffs)) {}
  Kind kind_;
  double a_;
  std::vector<double> coeffs_;
};

/// Columns x, numeric, oracle, abs_err.
OutputTable fracderiv_table(const FunctionSource& source, double beta, const GridSpec& grid,
                            const QuadratureSpec& q = {});

/// Columns x, u, pole.
OutputTable riccati_eval_table(const riccati::RiccatiParams& rp, riccati::Branch branch, const GridSpec& grid);

/// Column x: the poles of the branch in [grid.start, grid.stop].
OutputTable riccati_poles_table(const riccati::RiccatiParams& rp, riccati::Branch branch, const GridSpec& grid);

/// Thrown by riccati_verify when [x0, x1] contains a pole of the branch.
class PoleInIntervalError : public DomainError {
 public:
  using DomainError::DomainError;
};

struct VerifyReport {
  double max_residual;         // |u' + a u^2 - forcing| with u' by finite differences
  double max_deviation;        // closed form vs. adaptive integration of the Riccati equation
  double max_linear_deviation; // closed form vs. y'/(a y) from the linear equation
};

/// Integrates from x0 with the closed-form initial value and compares at
/// `points` equally spaced stations up to x1.
VerifyReport riccati_verify(const riccati::RiccatiParams& rp, riccati::Branch branch, double x0, double x1,
                            int points = 50);

/// Columns max_residual, max_deviation, max_linear_deviation.
OutputTable verify_table(const VerifyReport& report);

/// Columns eta, H, pole.
OutputTable cosmo_hubble_table(const cosmo::CosmoParams& cp, riccati::Branch branch, const GridSpec& eta_grid);

/// Columns eta, R_ratio (relative to eta_ref).
OutputTable cosmo_scale_table(const cosmo::CosmoParams& cp, riccati::Branch branch, const GridSpec& eta_grid,
                              double eta_ref);

/// Columns eta, delta, H, pole over the (η, δ) lattice, η outer.
///
/// A lattice point is a pole row when the denominator is below the pole
/// threshold there, or when it is the point of smaller |denominator| next to
/// a sign change of the denominator between neighbouring η values.
OutputTable cosmo_figure_table(double c, int k, riccati::Branch branch, const GridSpec& eta_grid,
                               const GridSpec& delta_grid);

}  // namespace fracriccati::cli
