#include "fracriccati/fracops.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "fracriccati/errors.hpp"
#include "fracriccati/specfun.hpp"

namespace fracriccati {

FracOrder::FracOrder(double delta) : delta_(delta) {
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw DomainError("fractional order delta must lie in (0, 1], got " + std::to_string(delta));
  }
}

void QuadratureSpec::validate() const {
  if (base_panels < 16) throw DomainError("quadrature needs at least 16 base panels");
  if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  if (max_doublings < 0) throw DomainError("quadrature doubling budget must be non-negative");
}

namespace fracops {

namespace {

using Table = std::vector<double>;

// (1+u)^p + (1-u)^p - 2 = 2 Σ_{k even >= 2} C(p,k) u^k, and
// (1-u)^p - 1 + p u = Σ_{k >= 2} C(p,k) (-u)^k. Both for |u| <= 1/4.
double even_binomial_tail(double p, double u) {
  double coef = p;  // C(p,1)
  double upow = u;
  double sum = 0.0;
  for (int k = 2; k < 200; ++k) {
    coef *= (p - (k - 1)) / k;
    upow *= u;
    if (k % 2 == 0) {
      const double term = 2.0 * coef * upow;
      sum += term;
      if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    }
  }
  return sum;
}

double signed_binomial_tail(double p, double u) {
  double coef = p;
  double upow = -u;
  double sum = 0.0;
  for (int k = 2; k < 200; ++k) {
    coef *= (p - (k - 1)) / k;
    upow *= -u;
    const double term = coef * upow;
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

// Weights c_m, m = 0..N, for the node at distance m*h from x. The quadrature
// is h^α/Γ(α+2) Σ c_m f(x - m h).
Table build_table(double alpha, int n) {
  const double p = alpha + 1.0;
  Table c(static_cast<std::size_t>(n) + 1);
  c[0] = 1.0;
  for (int m = 1; m < n; ++m) {
    const double dm = m;
    double v;
    if (m < 4) {
      v = std::pow(dm + 1.0, p) - 2.0 * std::pow(dm, p) + std::pow(dm - 1.0, p);
    } else {
      v = std::pow(dm, p) * even_binomial_tail(p, 1.0 / dm);
    }
    c[static_cast<std::size_t>(m)] = v;
  }
  const double dn = n;
  c[static_cast<std::size_t>(n)] = n < 4 ? std::pow(dn - 1.0, p) - (dn - 1.0 - alpha) * std::pow(dn, alpha)
                                         : std::pow(dn, p) * signed_binomial_tail(p, 1.0 / dn);
  return c;
}

// Per-thread memo of weight tables; operations stay reentrant.
std::shared_ptr<const Table> weights(double alpha, int n) {
  struct Entry {
    double alpha;
    int n;
    std::shared_ptr<const Table> table;
  };
  thread_local std::vector<Entry> cache;
  for (const Entry& e : cache) {
    if (e.alpha == alpha && e.n == n) return e.table;
  }
  auto table = std::make_shared<const Table>(build_table(alpha, n));
  if (cache.size() >= 32) cache.erase(cache.begin());
  cache.push_back({alpha, n, table});
  return table;
}

double apply(const Table& c, double alpha, const RealFunction& f, double x) {
  const int n = static_cast<int>(c.size()) - 1;
  const double h = x / n;
  double sum = 0.0;
  for (int j = 0; j <= n; ++j) sum += c[static_cast<std::size_t>(n - j)] * f(j * h);
  return std::pow(h, alpha) * specfun::rgamma(alpha + 2.0) * sum;
}

bool converged(double prev, double cur, double tol) { return std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur)); }

void check_point(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(what) + ": evaluation point must be positive, got " + std::to_string(x));
  }
}

double integrate_smooth(const std::function<double(double)>& f, double a, double b, double tol) {
  using Gk = boost::math::quadrature::gauss_kronrod<double, 21>;
  if (a == b) return 0.0;
  double err = 0.0;
  double l1 = 0.0;
  const double v = Gk::integrate(f, a, b, 15, tol, &err, &l1);
  if (!std::isfinite(v) || err > tol * std::max(1.0, l1)) {
    throw ConvergenceError("adaptive quadrature did not reach tolerance on [" + std::to_string(a) + ", " +
                           std::to_string(b) + "]");
  }
  return v;
}

// [0, b] where the integrand may behave like s^γ at the origin.
double integrate_from_origin(const std::function<double(double)>& f, double b, double tol) {
  boost::math::quadrature::tanh_sinh<double> ts;
  double err = 0.0;
  double l1 = 0.0;
  const double v = ts.integrate(f, 0.0, b, tol, &err, &l1);
  if (!std::isfinite(v) || err > 10.0 * tol * std::max(1.0, l1)) {
    throw ConvergenceError("tanh-sinh quadrature did not reach tolerance on [0, " + std::to_string(b) + "]");
  }
  return v;
}

}  // namespace

double rl_integral(const RealFunction& f, double alpha, double x, const QuadratureSpec& q) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("rl_integral: order must be positive");
  // The integral over [0, 0] vanishes; composed operators sample this node.
  if (x == 0.0) return 0.0;
  check_point(x, "rl_integral");
  q.validate();
  int n = q.base_panels;
  double prev = apply(*weights(alpha, n), alpha, f, x);
  if (q.max_doublings == 0) return prev;
  for (int d = 1; d <= q.max_doublings; ++d) {
    n *= 2;
    const double cur = apply(*weights(alpha, n), alpha, f, x);
    if (converged(prev, cur, q.tol)) return cur;
    prev = cur;
  }
  throw ConvergenceError("rl_integral: no convergence to tol " + std::to_string(q.tol) + " within " +
                         std::to_string(q.max_doublings) + " mesh doublings");
}

double rl_derivative(const RealFunction& f, double beta, double x, const QuadratureSpec& q) {
  if (!(beta >= 0.0 && beta < 2.0)) throw DomainError("rl_derivative: order must lie in [0, 2)");
  check_point(x, "rl_derivative");
  q.validate();
  if (beta == 0.0) return f(x);

  const int order = beta <= 1.0 ? 1 : 2;
  const double alpha = order - beta;
  const double h = std::min(std::max(1e-5, std::cbrt(q.tol) * x), 0.5 * x);
  if (!(x - h > 0.0) || h <= 0.0) throw ConvergenceError("rl_derivative: finite-difference step underflow");

  auto differentiate = [&](const auto& profile) {
    auto central = [&](double step) {
      if (order == 1) return (profile(x + step) - profile(x - step)) / (2.0 * step);
      return (profile(x + step) - 2.0 * profile(x) + profile(x - step)) / (step * step);
    };
    return (4.0 * central(0.5 * h) - central(h)) / 3.0;
  };

  if (alpha == 0.0) return differentiate([&](double y) { return f(y); });

  auto at_mesh = [&](int n) {
    const auto table = weights(alpha, n);
    return differentiate([&](double y) { return apply(*table, alpha, f, y); });
  };
  int n = q.base_panels;
  double prev = at_mesh(n);
  if (q.max_doublings == 0) return prev;
  for (int d = 1; d <= q.max_doublings; ++d) {
    n *= 2;
    const double cur = at_mesh(n);
    if (converged(prev, cur, q.tol)) return cur;
    prev = cur;
  }
  throw ConvergenceError("rl_derivative: no convergence to tol " + std::to_string(q.tol) + " within " +
                         std::to_string(q.max_doublings) + " mesh doublings");
}

double power_rule(double a, double beta, double x) {
  if (!(a > -1.0)) throw DomainError("power_rule: exponent must exceed -1");
  check_point(x, "power_rule");
  return specfun::gamma(a + 1.0) * specfun::rgamma(a + 1.0 - beta) * std::pow(x, a - beta);
}

double frac_const(double b, FracOrder delta, double x) {
  check_point(x, "frac_const");
  if (delta.is_classical()) return b;
  return b * std::pow(x, delta.applied_order()) * specfun::rgamma(2.0 - delta.delta());
}

namespace {

SeriesResult finish_series(const std::vector<double>& terms) {
  SeriesResult r{0.0, 0.0, false};
  for (double t : terms) r.value += t;
  if (!terms.empty()) r.last_term = std::abs(terms.back());
  if (terms.size() >= 2) r.non_decaying = std::abs(terms.back()) > std::abs(terms[terms.size() - 2]);
  return r;
}

void check_series(const SeriesSpec& s) {
  if (s.terms < 0) throw DomainError("series truncation order must be non-negative");
}

}  // namespace

SeriesResult frac_leibniz(const RealFunction& f, const RealFunction& g, double beta, double x, const SeriesSpec& s,
                          const QuadratureSpec& q) {
  check_point(x, "frac_leibniz");
  check_series(s);
  std::vector<double> terms;
  for (int k = 0; k <= s.terms; ++k) {
    const double coef = specfun::gen_binomial(beta, k);
    const double fk = coef == 0.0 ? 0.0 : f.derivative(k, x);
    if (coef == 0.0 || fk == 0.0) {
      terms.push_back(0.0);
      continue;
    }
    const double order = beta - k;
    const double dg = order >= 0.0 ? rl_derivative(g, order, x, q) : rl_integral(g, -order, x, q);
    terms.push_back(coef * fk * dg);
  }
  return finish_series(terms);
}

SeriesResult frac_chain(const RealFunction& h, double beta, double x, const SeriesSpec& s) {
  check_point(x, "frac_chain");
  check_series(s);
  std::vector<double> terms;
  for (int k = 0; k <= s.terms; ++k) {
    const double coef = specfun::gen_binomial(beta, k);
    // D^{β-k} 1 = x^{k-β}/Γ(1+k-β)
    const double unit = std::pow(x, k - beta) * specfun::rgamma(1.0 + k - beta);
    if (coef == 0.0 || unit == 0.0) {
      terms.push_back(0.0);
      continue;
    }
    terms.push_back(coef * unit * h.derivative(k, x));
  }
  return finish_series(terms);
}

std::vector<double> solve_linear_fractional(const RealFunction& p, const RealFunction& g, FracOrder delta,
                                            std::span<const double> xs, double c, const QuadratureSpec& q) {
  q.validate();
  if (xs.empty()) return {};
  check_point(xs.front(), "solve_linear_fractional");
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) throw DomainError("solve_linear_fractional: grid must be strictly increasing");
  }
  const double x_start = xs.front();
  auto mu = [&](double s) { return std::exp(integrate_smooth([&](double t) { return p(t); }, x_start, s, q.tol)); };
  // A fixed, finer mesh keeps the forcing a smooth function of s, which the
  // outer quadrature needs for its error estimate.
  const QuadratureSpec fixed{q.base_panels * 4, q.tol, 0};
  auto forcing = [&](double s) {
    if (delta.is_classical()) return g(s);
    return s > 0.0 ? rl_integral(g, delta.applied_order(), s, fixed) : 0.0;
  };
  const std::function<double(double)> integrand = [&](double s) { return mu(s) * forcing(s); };

  std::vector<double> u;
  u.reserve(xs.size());
  double accumulated = 0.0;
  double prev = 0.0;
  for (double x : xs) {
    accumulated += prev == 0.0 ? integrate_from_origin(integrand, x, q.tol) : integrate_smooth(integrand, prev, x, q.tol);
    prev = x;
    u.push_back((accumulated + c) / mu(x));
  }
  return u;
}

}  // namespace fracops
}  // namespace fracriccati
