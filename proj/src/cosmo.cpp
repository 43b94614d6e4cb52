#include "fracriccati/cosmo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracriccati/errors.hpp"

namespace fracriccati::cosmo {

namespace {

void check_eta(double eta) {
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw DomainError("cosmo: conformal time must be positive, got " + std::to_string(eta));
  }
}

}  // namespace

double c_of_gamma(double gamma) { return 1.5 * gamma - 1.0; }

CosmoParams CosmoParams::make(std::optional<double> c, std::optional<double> gamma, int k, double delta) {
  if (k < -1 || k > 1) throw DomainError("cosmo: curvature index must be -1, 0 or 1");
  if (!c && !gamma) throw DomainError("cosmo: either c or the adiabatic index gamma is required");
  if (c && gamma && std::abs(*c - c_of_gamma(*gamma)) > 1e-12) {
    throw DomainError("cosmo: c and gamma are inconsistent (c must equal 1.5 gamma - 1)");
  }
  const double value = c ? *c : c_of_gamma(*gamma);
  if (!std::isfinite(value)) throw DomainError("cosmo: c must be finite");
  if (value == 0.0) throw ZeroCouplingError("cosmo: c = 0 (gamma = 2/3) makes the Riccati coefficient vanish");
  return CosmoParams(value, k, FracOrder(delta));
}

riccati::RiccatiParams CosmoParams::riccati_params() const {
  return riccati::RiccatiParams{c_, -k_ * c_, delta_};
}

HubbleEval hubble(const CosmoParams& cp, double eta, riccati::Branch branch) {
  check_eta(eta);
  if (cp.k() == 0) throw DomainError("cosmo: k = 0 is not delta-modified; use hubble_flat");
  // u = (1/a) q r x^{r-1} ratio with a = c and q r = |c|/√Γ(2-δ), so H = u.
  const riccati::SolutionEval u = riccati::eval_u(cp.riccati_params(), branch, eta);
  return {eta, u.value, branch, u.pole, true};
}

HubbleEval hubble_flat(const CosmoParams& cp, double eta) {
  check_eta(eta);
  return {eta, 1.0 / (cp.c() * eta), riccati::Branch::First, false, false};
}

HubbleEval hubble_any(const CosmoParams& cp, double eta, riccati::Branch branch) {
  return cp.k() == 0 ? hubble_flat(cp, eta) : hubble(cp, eta, branch);
}

double scale_factor(const CosmoParams& cp, double eta, double eta_ref, riccati::Branch branch) {
  check_eta(eta);
  check_eta(eta_ref);
  if (eta == eta_ref) return 1.0;
  if (cp.k() == 0) return std::pow(eta / eta_ref, 1.0 / cp.c());
  const riccati::RiccatiParams rp = cp.riccati_params();
  const double y = riccati::eval_y_branch(rp, branch, eta).y;
  const double y_ref = riccati::eval_y_branch(rp, branch, eta_ref).y;
  const double ratio = y / y_ref;
  const bool crosses =
      !riccati::find_poles(rp, std::min(eta, eta_ref), std::max(eta, eta_ref), branch).empty();
  if (crosses || !(ratio > 0.0)) {
    throw DomainError("cosmo: the scale factor branch crosses zero between eta=" + std::to_string(eta_ref) +
                      " and eta=" + std::to_string(eta));
  }
  return std::pow(ratio, 1.0 / cp.c());
}

}  // namespace fracriccati::cosmo
