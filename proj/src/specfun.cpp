#include "fracriccati/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fracriccati/errors.hpp"

namespace fracriccati::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kFpMin = std::numeric_limits<double>::min() / kEps;
constexpr int kMaxIter = 200000;

// Below this argument the second-kind functions come from Temme's series,
// above it from Steed's continued fraction.
constexpr double kTemmeSwitch = 2.0;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::nearbyint(x); }

// Lanczos approximation, g = 7, nine terms.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr std::array<double, 21> kFactorials = {
    1.0,
    1.0,
    2.0,
    6.0,
    24.0,
    120.0,
    720.0,
    5040.0,
    40320.0,
    362880.0,
    3628800.0,
    39916800.0,
    479001600.0,
    6227020800.0,
    87178291200.0,
    1307674368000.0,
    20922789888000.0,
    355687428096000.0,
    6402373705728000.0,
    121645100408832000.0,
    2432902008176640000.0};

double lanczos_gamma(double x) {
  const double z = x - 1.0;
  double series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) series += kLanczos[i] / (z + static_cast<double>(i));
  const double t = z + kLanczosG + 0.5;
  // split the power so Γ stays finite up to x ~ 171
  const double half = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * kPi) * half * (half * std::exp(-t)) * series;
}

// Taylor coefficients of 1/Γ(1+μ) about μ = 0.
constexpr std::array<double, 25> kRecipGammaTaylor = {
    1.00000000000000000e+00,  5.77215664901532866e-01,  -6.55878071520253902e-01,
    -4.20026350340952370e-02, 1.66538611382291479e-01,  -4.21977345555443334e-02,
    -9.62197152787697303e-03, 7.21894324666309990e-03,  -1.16516759185906517e-03,
    -2.15241674114950975e-04, 1.28050282388116196e-04,  -2.01348547807882387e-05,
    -1.25049348214267063e-06, 1.13302723198169593e-06,  -2.05633841697760707e-07,
    6.11609510448141609e-09,  5.00200764446922295e-09,  -1.18127457048702004e-09,
    1.04342671169110054e-10,  7.78226343990507081e-12,  -3.69680561864220598e-12,
    5.10037028745447575e-13,  -2.05832605356650664e-14, -5.34812253942301782e-15,
    1.22677862823826084e-15};

// Temme's auxiliary gammas for |mu| <= 1/2:
//   gam1 = (1/Γ(1-μ) - 1/Γ(1+μ)) / 2μ,  gam2 = (1/Γ(1-μ) + 1/Γ(1+μ)) / 2,
//   gampl = 1/Γ(1+μ),                   gammi = 1/Γ(1-μ).
struct TemmeGammas {
  double gam1;
  double gam2;
  double gampl;
  double gammi;
};

TemmeGammas temme_gammas(double mu) {
  const double mu2 = mu * mu;
  double even = 0.0;
  double odd = 0.0;
  for (int j = static_cast<int>(kRecipGammaTaylor.size()) - 1; j >= 0; --j) {
    if (j % 2 == 0) {
      even = even * mu2 + kRecipGammaTaylor[static_cast<std::size_t>(j)];
    } else {
      odd = odd * mu2 + kRecipGammaTaylor[static_cast<std::size_t>(j)];
    }
  }
  return {-odd, even, even + mu * odd, even - mu * odd};
}

struct JY {
  double j, y, jp, yp;
};

// J_nu, Y_nu and derivatives for nu >= 0, x > 0 (Temme / Steed).
JY bessel_jy(double nu, double x) {
  const int nl = x < kTemmeSwitch ? static_cast<int>(nu + 0.5)
                                  : std::max(0, static_cast<int>(nu - x + 1.5));
  const double mu = nu - nl;
  const double mu2 = mu * mu;
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;
  const double w = xi2 / kPi;

  // CF1: J'_nu / J_nu by the modified Lentz method.
  int isign = 1;
  double h = std::max(nu * xi, kFpMin);
  double b = xi2 * nu;
  double d = 0.0;
  double c = h;
  int it = 1;
  for (; it <= kMaxIter; ++it) {
    b += xi2;
    d = b - d;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = b - 1.0 / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = c * d;
    h *= del;
    if (d < 0.0) isign = -isign;
    if (std::abs(del - 1.0) < kEps) break;
  }
  if (it > kMaxIter) throw ConvergenceError("bessel J/Y: continued fraction CF1 did not converge");

  // Downward recurrence to the reduced order mu, unnormalised.
  double jl = isign * kFpMin;
  double jpl = h * jl;
  const double jl1 = jl;
  const double jp1 = jpl;
  double fact = nu * xi;
  for (int l = nl; l >= 1; --l) {
    const double jtemp = fact * jl + jpl;
    fact -= xi;
    jpl = fact * jtemp - jl;
    jl = jtemp;
  }
  if (jl == 0.0) jl = kEps;
  const double f = jpl / jl;

  double jmu = 0.0;
  double ymu = 0.0;
  double ymup = 0.0;
  double y1 = 0.0;
  if (x < kTemmeSwitch) {
    const double x2 = 0.5 * x;
    const double pimu = kPi * mu;
    const double fact1 = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
    double dd = -std::log(x2);
    double e = mu * dd;
    const double fact2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
    const TemmeGammas g = temme_gammas(mu);
    double ff = 2.0 / kPi * fact1 * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * dd);
    e = std::exp(e);
    double p = e / (g.gampl * kPi);
    double q = 1.0 / (e * kPi * g.gammi);
    const double pimu2 = 0.5 * pimu;
    const double fact3 = std::abs(pimu2) < kEps ? 1.0 : std::sin(pimu2) / pimu2;
    const double r = kPi * pimu2 * fact3 * fact3;
    double cc = 1.0;
    dd = -x2 * x2;
    double sum = ff + r * q;
    double sum1 = p;
    int i = 1;
    for (; i <= kMaxIter; ++i) {
      ff = (i * ff + p + q) / (i * i - mu2);
      cc *= dd / i;
      p /= (i - mu);
      q /= (i + mu);
      const double del = cc * (ff + r * q);
      sum += del;
      const double del1 = cc * p - i * del;
      sum1 += del1;
      if (std::abs(del) < (1.0 + std::abs(sum)) * kEps) break;
    }
    if (i > kMaxIter) throw ConvergenceError("bessel Y: Temme series did not converge");
    ymu = -sum;
    y1 = -sum1 * xi2;
    ymup = mu * xi * ymu - y1;
    jmu = w / (ymup - f * ymu);
  } else {
    // CF2 (Steed): p + iq = (J'_mu + i Y'_mu) / (J_mu + i Y_mu).
    double a = 0.25 - mu2;
    double p = -0.5 * xi;
    double q = 1.0;
    const double br = 2.0 * x;
    double bi = 2.0;
    double fct = a * xi / (p * p + q * q);
    double cr = br + q * fct;
    double ci = bi + p * fct;
    double den = br * br + bi * bi;
    double dr = br / den;
    double di = -bi / den;
    double dlr = cr * dr - ci * di;
    double dli = cr * di + ci * dr;
    double temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    int i = 2;
    for (; i <= kMaxIter; ++i) {
      a += 2 * (i - 1);
      bi += 2.0;
      dr = a * dr + br;
      di = a * di + bi;
      if (std::abs(dr) + std::abs(di) < kFpMin) dr = kFpMin;
      fct = a / (cr * cr + ci * ci);
      cr = br + cr * fct;
      ci = bi - ci * fct;
      if (std::abs(cr) + std::abs(ci) < kFpMin) cr = kFpMin;
      den = dr * dr + di * di;
      dr /= den;
      di /= -den;
      dlr = cr * dr - ci * di;
      dli = cr * di + ci * dr;
      temp = p * dlr - q * dli;
      q = p * dli + q * dlr;
      p = temp;
      if (std::abs(dlr - 1.0) + std::abs(dli) < kEps) break;
    }
    if (i > kMaxIter) throw ConvergenceError("bessel J/Y: continued fraction CF2 did not converge");
    const double gam = (p - f) / q;
    jmu = std::sqrt(w / ((p - f) * gam + q));
    jmu = std::copysign(jmu, jl);
    ymu = jmu * gam;
    ymup = ymu * (p + q / gam);
    y1 = mu * xi * ymu - ymup;
  }

  const double scale = jmu / jl;
  JY out{};
  out.j = jl1 * scale;
  out.jp = jp1 * scale;
  for (int i = 1; i <= nl; ++i) {
    const double ytemp = (mu + i) * xi2 * y1 - ymu;
    ymu = y1;
    y1 = ytemp;
  }
  out.y = ymu;
  out.yp = nu * xi * ymu - y1;
  return out;
}

struct IK {
  double i, k, ip, kp;
};

// I_nu, K_nu and derivatives for nu >= 0, x > 0. With `scaled`, I and I'
// carry a factor e^{-x} and K, K' a factor e^{x}.
IK bessel_ik(double nu, double x, bool scaled) {
  const int nl = static_cast<int>(nu + 0.5);
  const double mu = nu - nl;
  const double mu2 = mu * mu;
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;

  // CF1: I'_nu / I_nu.
  double h = std::max(nu * xi, kFpMin);
  double b = xi2 * nu;
  double d = 0.0;
  double c = h;
  int it = 1;
  for (; it <= kMaxIter; ++it) {
    b += xi2;
    d = 1.0 / (b + d);
    c = b + 1.0 / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  if (it > kMaxIter) throw ConvergenceError("bessel I/K: continued fraction CF1 did not converge");

  double il = kFpMin;
  double ipl = h * il;
  const double il1 = il;
  const double ip1 = ipl;
  double fact = nu * xi;
  for (int l = nl; l >= 1; --l) {
    const double itemp = fact * il + ipl;
    fact -= xi;
    ipl = fact * itemp + il;
    il = itemp;
  }
  const double f = ipl / il;

  double kmu = 0.0;
  double k1 = 0.0;
  if (x < kTemmeSwitch) {
    const double x2 = 0.5 * x;
    const double pimu = kPi * mu;
    const double fact1 = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
    double dd = -std::log(x2);
    double e = mu * dd;
    const double fact2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
    const TemmeGammas g = temme_gammas(mu);
    double ff = fact1 * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * dd);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / g.gampl;
    double q = 0.5 / (e * g.gammi);
    double cc = 1.0;
    dd = x2 * x2;
    double sum1 = p;
    int i = 1;
    for (; i <= kMaxIter; ++i) {
      ff = (i * ff + p + q) / (i * i - mu2);
      cc *= dd / i;
      p /= (i - mu);
      q /= (i + mu);
      const double del = cc * ff;
      sum += del;
      const double del1 = cc * (p - i * ff);
      sum1 += del1;
      if (std::abs(del) < std::abs(sum) * kEps) break;
    }
    if (i > kMaxIter) throw ConvergenceError("bessel K: Temme series did not converge");
    kmu = sum;
    k1 = sum1 * xi2;
    if (scaled) {
      const double ex = std::exp(x);
      kmu *= ex;
      k1 *= ex;
    }
  } else {
    // CF2 (Steed) with Thompson-Barnett summation.
    double bb = 2.0 * (1.0 + x);
    double dd = 1.0 / bb;
    double hh = dd;
    double delh = dd;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25 - mu2;
    double q = a1;
    double cc = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    int i = 2;
    for (; i <= kMaxIter; ++i) {
      a -= 2 * (i - 1);
      cc = -a * cc / i;
      const double qnew = (q1 - bb * q2) / a;
      q1 = q2;
      q2 = qnew;
      q += cc * qnew;
      bb += 2.0;
      dd = 1.0 / (bb + a * dd);
      delh = (bb * dd - 1.0) * delh;
      hh += delh;
      const double dels = q * delh;
      s += dels;
      if (std::abs(dels / s) < kEps) break;
    }
    if (i > kMaxIter) throw ConvergenceError("bessel K: continued fraction CF2 did not converge");
    hh = a1 * hh;
    kmu = std::sqrt(kPi / (2.0 * x)) / s;
    if (!scaled) kmu *= std::exp(-x);
    k1 = kmu * (mu + x + 0.5 - hh) * xi;
  }

  const double kmup = mu * xi * kmu - k1;
  // Wronskian I K' - I' K = -1/x fixes the normalisation of I.
  const double imu = xi / (f * kmu - kmup);
  IK out{};
  out.i = imu * il1 / il;
  out.ip = imu * ip1 / il;
  for (int i = 1; i <= nl; ++i) {
    const double ktemp = (mu + i) * xi2 * k1 + kmu;
    kmu = k1;
    k1 = ktemp;
  }
  out.k = kmu;
  out.kp = nu * xi * kmu - k1;
  return out;
}

void check_args(double nu, double x) {
  if (!std::isfinite(nu)) throw DomainError("bessel: order must be finite");
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("bessel: argument must be positive and finite, got " + std::to_string(x));
  }
}

double finite_or_throw(double v, BesselKind kind, double nu, double x) {
  if (!std::isfinite(v)) {
    throw OverflowError(std::string("bessel ") + to_string(kind) + ": overflow at nu=" +
                        std::to_string(nu) + ", x=" + std::to_string(x));
  }
  return v;
}

double evaluate(BesselKind kind, double nu, double x, bool scaled) {
  check_args(nu, x);
  const double order = std::abs(nu);
  const bool reflect = nu < 0.0;
  const double s = sin_pi(order);
  const double c = cos_pi(order);
  double v = 0.0;
  switch (kind) {
    case BesselKind::J:
    case BesselKind::Y: {
      const JY r = bessel_jy(order, x);
      if (!reflect) {
        v = kind == BesselKind::J ? r.j : r.y;
      } else if (kind == BesselKind::J) {
        // J_{-ν} = cos(νπ) J_ν - sin(νπ) Y_ν
        v = (s == 0.0) ? c * r.j : c * r.j - s * r.y;
      } else {
        // Y_{-ν} = sin(νπ) J_ν + cos(νπ) Y_ν
        v = (c == 0.0) ? s * r.j : s * r.j + c * r.y;
      }
      break;
    }
    case BesselKind::I: {
      const IK r = bessel_ik(order, x, true);
      v = r.i;
      if (reflect && s != 0.0) {
        // I_{-ν} = I_ν + (2/π) sin(νπ) K_ν
        v += 2.0 / kPi * s * r.k * std::exp(-2.0 * x);
      }
      if (!scaled) v *= std::exp(x);
      break;
    }
    case BesselKind::K: {
      const IK r = bessel_ik(order, x, scaled);
      v = r.k;
      break;
    }
  }
  return finite_or_throw(v, kind, nu, x);
}

}  // namespace

double sin_pi(double x) {
  double r = std::fmod(x, 2.0);
  if (r < 0.0) r += 2.0;
  if (r < 0.25) return std::sin(kPi * r);
  if (r < 0.75) return std::cos(kPi * (r - 0.5));
  if (r < 1.25) return -std::sin(kPi * (r - 1.0));
  if (r < 1.75) return -std::cos(kPi * (r - 1.5));
  return std::sin(kPi * (r - 2.0));
}

double cos_pi(double x) {
  double r = std::fmod(std::abs(x), 2.0);
  if (r < 0.25) return std::cos(kPi * r);
  if (r < 0.75) return -std::sin(kPi * (r - 0.5));
  if (r < 1.25) return -std::cos(kPi * (r - 1.0));
  if (r < 1.75) return std::sin(kPi * (r - 1.5));
  return std::cos(kPi * (r - 2.0));
}

double gamma(double x) {
  if (std::isnan(x)) throw DomainError("gamma: NaN argument");
  if (is_nonpositive_integer(x)) throw PoleError("gamma: pole at x=" + std::to_string(x));
  if (x == std::nearbyint(x) && x <= 21.0) return kFactorials[static_cast<std::size_t>(x) - 1];
  if (x < 0.5) return kPi / (sin_pi(x) * lanczos_gamma(1.0 - x));
  return lanczos_gamma(x);
}

double rgamma(double x) {
  if (std::isnan(x)) throw DomainError("rgamma: NaN argument");
  if (is_nonpositive_integer(x)) return 0.0;
  if (x < 0.5) return sin_pi(x) * lanczos_gamma(1.0 - x) / kPi;
  return 1.0 / gamma(x);
}

double gen_binomial(double beta, int k) {
  if (k < 0) throw DomainError("gen_binomial: k must be non-negative");
  const bool num_pole = is_nonpositive_integer(1.0 + beta);
  const bool den_pole = is_nonpositive_integer(1.0 - k + beta);
  if (num_pole) {
    // 1-k+β = (1+β) - k is then a pole as well
    throw IndeterminateError("gen_binomial: coincident Γ poles at beta=" + std::to_string(beta));
  }
  if (den_pole) return 0.0;
  return gamma(1.0 + beta) * rgamma(1.0 + k) * rgamma(1.0 - k + beta);
}

const char* to_string(BesselKind kind) {
  switch (kind) {
    case BesselKind::J:
      return "J";
    case BesselKind::Y:
      return "Y";
    case BesselKind::I:
      return "I";
    case BesselKind::K:
      return "K";
  }
  return "?";
}

double bessel(BesselKind kind, double nu, double x) { return evaluate(kind, nu, x, false); }

double bessel_scaled(BesselKind kind, double nu, double x) {
  return evaluate(kind, nu, x, kind == BesselKind::I || kind == BesselKind::K);
}

BesselDerivative bessel_derivative(BesselKind kind, double nu, double x) {
  const double mid = bessel(kind, nu, x);
  const double below = bessel(kind, nu - 1.0, x);
  const double above = bessel(kind, nu + 1.0, x);
  const double ratio = nu / x * mid;
  BesselDerivative d{};
  switch (kind) {
    case BesselKind::J:
    case BesselKind::Y:
      d.lower_form = below - ratio;
      d.upper_form = ratio - above;
      break;
    case BesselKind::I:
      d.lower_form = below - ratio;
      d.upper_form = above + ratio;
      break;
    case BesselKind::K:
      d.lower_form = -below - ratio;
      d.upper_form = ratio - above;
      break;
  }
  d.value = 0.5 * (d.lower_form + d.upper_form);
  return d;
}

}  // namespace fracriccati::specfun
