#include "fracriccati/riccati.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "fracriccati/errors.hpp"

namespace fracriccati::riccati {

namespace {

using specfun::BesselKind;

void check_point(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("riccati: evaluation point must be positive, got " + std::to_string(x));
  }
}

void require_bessel_form(const BesselMap& m) {
  if (m.regime == Regime::Degenerate) {
    throw DegenerateRegimeError("riccati: b = 0 has no Bessel representation; the solution is 1/(a(x - C))");
  }
}

// q r = √(|ab|/Γ(2-δ)); the prefactor of the Bessel ratio is q r x^{r-1}.
double amplitude(const RiccatiParams& rp) {
  return std::sqrt(std::abs(rp.a * rp.b) * specfun::rgamma(2.0 - rp.delta.delta()));
}

// K'_ν = -K_{ν-1} - (ν/z) K_ν, whereas J, Y and I share Z'_ν = Z_{ν-1} - (ν/z) Z_ν.
double lower_sign(BesselKind kind) { return kind == BesselKind::K ? -1.0 : 1.0; }

}  // namespace

RiccatiParams RiccatiParams::make(double a, double b, double delta) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("riccati: coefficients must be finite");
  if (a == 0.0) throw DomainError("riccati: coefficient a must be non-zero");
  return RiccatiParams{a, b, FracOrder(delta)};
}

const char* to_string(Regime regime) {
  switch (regime) {
    case Regime::Oscillatory:
      return "oscillatory";
    case Regime::Modified:
      return "modified";
    case Regime::Degenerate:
      return "degenerate";
  }
  return "?";
}

BesselKind BesselMap::kind(Branch branch) const {
  const bool first = branch == Branch::First;
  if (regime == Regime::Modified) return first ? BesselKind::I : BesselKind::K;
  return first ? BesselKind::J : BesselKind::Y;
}

BesselMap map_params(const RiccatiParams& rp) {
  if (rp.a == 0.0) throw DomainError("riccati: coefficient a must be non-zero");
  const double three_minus = 3.0 - rp.delta.delta();
  BesselMap m{};
  m.p = 0.5;
  m.r = three_minus / 2.0;
  m.n = 1.0 / three_minus;
  m.q_mag = 2.0 / three_minus * amplitude(rp);
  const double ab = rp.a * rp.b;
  m.regime = ab < 0.0 ? Regime::Oscillatory : (ab > 0.0 ? Regime::Modified : Regime::Degenerate);
  return m;
}

SolutionEval eval_u(const RiccatiParams& rp, Branch branch, double x) {
  check_point(x);
  const BesselMap m = map_params(rp);
  require_bessel_form(m);
  const BesselKind kind = m.kind(branch);
  const double z = m.q_mag * std::pow(x, m.r);
  // Scaled I/K keep the ratio finite for large z.
  const double num = specfun::bessel_scaled(kind, m.n - 1.0, z);
  const double den = specfun::bessel_scaled(kind, m.n, z);
  SolutionEval out{};
  out.denominator_magnitude = std::abs(den);
  out.pole = std::abs(den) < kPoleThreshold * (std::abs(num) + 1.0);
  if (out.pole) {
    out.value = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  const double prefactor = amplitude(rp) * std::pow(x, m.r - 1.0) / rp.a;
  out.value = lower_sign(kind) * prefactor * num / den;
  return out;
}

SolutionEval eval_u1(const RiccatiParams& rp, double x) { return eval_u(rp, Branch::First, x); }

SolutionEval eval_u2(const RiccatiParams& rp, double x) { return eval_u(rp, Branch::Second, x); }

YBranch eval_y_branch(const RiccatiParams& rp, Branch branch, double x) {
  check_point(x);
  const BesselMap m = map_params(rp);
  require_bessel_form(m);
  const BesselKind kind = m.kind(branch);
  const double z = m.q_mag * std::pow(x, m.r);
  const double root = std::sqrt(x);
  const double mid = specfun::bessel(kind, m.n, z);
  const double below = specfun::bessel(kind, m.n - 1.0, z);
  const double above = specfun::bessel(kind, m.n + 1.0, z);
  const double qr_x = m.q_mag * m.r * std::pow(x, m.r - 1.0);

  YBranch out{};
  out.y = root * mid;
  // y'/y = (p - nr)/x + q r x^{r-1} Z'_n-ratio; p - nr = 0 leaves only the ratio term.
  out.dy = root * qr_x * lower_sign(kind) * below;
  // y'/y = (p + nr)/x ∓ q r x^{r-1} Z_{n+1}/Z_n, with + for I.
  const double upper_sign = kind == BesselKind::I ? 1.0 : -1.0;
  out.dy_alt = root * ((m.p + m.n * m.r) / x * mid + upper_sign * qr_x * above);
  return out;
}

double forcing(const RiccatiParams& rp, double x) { return fracops::frac_const(rp.b, rp.delta, x); }

double residual(const RiccatiParams& rp, double x, double u, double u_prime) {
  return u_prime + rp.a * u * u - forcing(rp, x);
}

std::vector<double> find_poles(const RiccatiParams& rp, double x_lo, double x_hi, Branch branch) {
  check_point(x_lo);
  if (!(x_hi > x_lo)) throw DomainError("find_poles: interval must satisfy x_lo < x_hi");
  const BesselMap m = map_params(rp);
  require_bessel_form(m);
  std::vector<double> poles;
  if (m.regime == Regime::Modified) return poles;

  const BesselKind kind = m.kind(branch);
  auto x_of = [&](double z) { return std::pow(z / m.q_mag, 1.0 / m.r); };
  auto denom = [&](double x) { return specfun::bessel(kind, m.n, m.q_mag * std::pow(x, m.r)); };

  // Zeros of J_n, Y_n with n in (1/3, 1/2] are more than 2.5 apart in z, so
  // a 0.25 scan step cannot straddle two of them.
  const double z_lo = m.q_mag * std::pow(x_lo, m.r);
  const double z_hi = m.q_mag * std::pow(x_hi, m.r);
  const int steps = std::max(64, static_cast<int>(std::ceil((z_hi - z_lo) / 0.25)));
  double x_prev = x_lo;
  double f_prev = denom(x_prev);
  if (f_prev == 0.0) poles.push_back(x_prev);
  for (int i = 1; i <= steps; ++i) {
    const double x_cur = i == steps ? x_hi : x_of(z_lo + (z_hi - z_lo) * i / steps);
    const double f_cur = denom(x_cur);
    if (f_cur == 0.0) {
      poles.push_back(x_cur);
    } else if (f_prev != 0.0 && std::signbit(f_prev) != std::signbit(f_cur)) {
      double lo = x_prev;
      double hi = x_cur;
      double f_lo = f_prev;
      // Bisect down to adjacent doubles.
      for (;;) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double f_mid = denom(mid);
        if (f_mid == 0.0) {
          lo = hi = mid;
          break;
        }
        if (std::signbit(f_mid) == std::signbit(f_lo)) {
          lo = mid;
          f_lo = f_mid;
        } else {
          hi = mid;
        }
      }
      poles.push_back(0.5 * (lo + hi));
    }
    x_prev = x_cur;
    f_prev = f_cur;
  }
  return poles;
}

}  // namespace fracriccati::riccati
