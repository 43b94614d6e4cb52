#pragma once

// FRW barotropic cosmology in conformal time η: the Hubble parameter
// H = R'/R obeys H' + c H^2 = -k c, and its δ-modified counterpart
// H' + c H^2 = -k c η^{1-δ}/Γ(2-δ). For k = ±1 this is the Riccati problem
// with a = c, b = -k c; k = 0 is left unmodified.

#include <optional>

#include "fracriccati/errors.hpp"
#include "fracriccati/riccati.hpp"

namespace fracriccati::cosmo {

/// c = (3/2) γ - 1.
double c_of_gamma(double gamma);

class CosmoParams {
 public:
  /// Exactly one of c and gamma is needed. When both are given they must
  /// agree to 1e-12 and c is used. Throws DomainError for c = 0 or k outside
  /// {-1, 0, 1}.
  static CosmoParams make(std::optional<double> c, std::optional<double> gamma, int k, double delta);

  double c() const { return c_; }
  int k() const { return k_; }
  FracOrder delta() const { return delta_; }

  /// a = c, b = -k c. Not meaningful for k = 0 (the degenerate regime).
  riccati::RiccatiParams riccati_params() const;

 private:
  CosmoParams(double c, int k, FracOrder delta) : c_(c), k_(k), delta_(delta) {}
  double c_;
  int k_;
  FracOrder delta_;
};

/// Rejection of c = 0, where the Riccati coefficient vanishes.
class ZeroCouplingError : public DomainError {
 public:
  using DomainError::DomainError;
};

struct HubbleEval {
  double eta;
  double H;  // NaN at a pole
  riccati::Branch branch;
  bool pole;
  bool delta_modified;  // false for the flat passthrough
};

/// H(η; δ) for k = ±1: branch 1 uses J (k = 1) or I (k = -1), branch 2 Y or
/// K. Throws DomainError for k = 0; use hubble_flat.
HubbleEval hubble(const CosmoParams& cp, double eta, riccati::Branch branch = riccati::Branch::First);

/// Flat case: H = 1/(c η), the solution of H' + c H^2 = 0 that diverges at
/// η -> 0+. Independent of δ.
HubbleEval hubble_flat(const CosmoParams& cp, double eta);

/// Dispatches on k.
HubbleEval hubble_any(const CosmoParams& cp, double eta, riccati::Branch branch = riccati::Branch::First);

/// R(η)/R(η_ref) = (y(η)/y(η_ref))^{1/c}, y the linear-equation solution of
/// the branch. For k = 0 this is (η/η_ref)^{1/c}. Throws DomainError when y
/// changes sign between the two times.
double scale_factor(const CosmoParams& cp, double eta, double eta_ref, riccati::Branch branch = riccati::Branch::First);

}  // namespace fracriccati::cosmo
