#include "fracriccati/function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fracriccati/errors.hpp"

namespace fracriccati {

namespace {

// Natural cubic spline; second derivatives m_i at the knots.
struct CubicSpline {
  std::vector<double> x, y, m;

  CubicSpline(std::span<const double> xs, std::span<const double> ys) : x(xs.begin(), xs.end()), y(ys.begin(), ys.end()) {
    const std::size_t n = x.size();
    m.assign(n, 0.0);
    // Thomas algorithm on the interior knots.
    std::vector<double> c(n, 0.0), d(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double h0 = x[i] - x[i - 1];
      const double h1 = x[i + 1] - x[i];
      const double rhs = 6.0 * ((y[i + 1] - y[i]) / h1 - (y[i] - y[i - 1]) / h0);
      const double diag = 2.0 * (h0 + h1) - h0 * c[i - 1];
      c[i] = h1 / diag;
      d[i] = (rhs - h0 * d[i - 1]) / diag;
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
      m[i] = d[i] - c[i] * m[i + 1];
      if (i == 1) break;
    }
  }

  double eval(int k, double t) const {
    const auto it = std::upper_bound(x.begin(), x.end(), t);
    std::size_t i = it == x.begin() ? 0 : static_cast<std::size_t>(it - x.begin()) - 1;
    i = std::min(i, x.size() - 2);
    const double h = x[i + 1] - x[i];
    const double a = (x[i + 1] - t) / h;
    const double b = (t - x[i]) / h;
    switch (k) {
      case 0:
        return a * y[i] + b * y[i + 1] + ((a * a * a - a) * m[i] + (b * b * b - b) * m[i + 1]) * h * h / 6.0;
      case 1:
        return (y[i + 1] - y[i]) / h - (3.0 * a * a - 1.0) / 6.0 * h * m[i] + (3.0 * b * b - 1.0) / 6.0 * h * m[i + 1];
      case 2:
        return a * m[i] + b * m[i + 1];
      case 3:
        return (m[i + 1] - m[i]) / h;
      default:
        return 0.0;
    }
  }
};

}  // namespace

RealFunction::RealFunction(Fn f, Continuity cls) : f_(std::move(f)), cls_(cls) {}

RealFunction::RealFunction(Fn f, DerivFn derivatives, Continuity cls)
    : f_(std::move(f)), deriv_(std::move(derivatives)), cls_(cls) {}

double RealFunction::derivative(int k, double x) const {
  if (k < 0) throw DomainError("derivative order must be non-negative");
  if (k == 0) return f_(x);
  if (!deriv_) {
    throw DomainError("derivative of order " + std::to_string(k) + " is not available for this function");
  }
  return deriv_(k, x);
}

RealFunction RealFunction::constant(double c) {
  return {[c](double) { return c; }, [c](int k, double) { return k == 0 ? c : 0.0; }};
}

RealFunction RealFunction::monomial(double a) {
  auto deriv = [a](int k, double t) {
    double coef = 1.0;
    for (int j = 0; j < k; ++j) {
      coef *= a - j;
      if (coef == 0.0) return 0.0;
    }
    return coef * std::pow(t, a - k);
  };
  return {[a](double t) { return std::pow(t, a); }, deriv};
}

RealFunction RealFunction::polynomial(std::vector<double> coeffs) {
  auto deriv = [coeffs](int k, double t) {
    double acc = 0.0;
    for (std::size_t j = coeffs.size(); j-- > static_cast<std::size_t>(k);) {
      double falling = 1.0;
      for (int i = 0; i < k; ++i) falling *= static_cast<double>(j) - i;
      acc = acc * t + coeffs[j] * falling;
    }
    return acc;
  };
  return {[deriv](double t) { return deriv(0, t); }, deriv};
}

RealFunction RealFunction::sine() {
  return {[](double t) { return std::sin(t); },
          [](int k, double t) { return std::sin(t + 0.5 * std::numbers::pi * k); }};
}

RealFunction RealFunction::exponential() {
  return {[](double t) { return std::exp(t); }, [](int, double t) { return std::exp(t); }};
}

RealFunction RealFunction::sampled(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 3) {
    throw DomainError("sampled function needs matching abscissae and values, at least 3 points");
  }
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) throw DomainError("sampled function abscissae must be strictly increasing");
  }
  auto spline = std::make_shared<const CubicSpline>(xs, ys);
  return {[spline](double t) { return spline->eval(0, t); }, [spline](int k, double t) { return spline->eval(k, t); },
          Continuity::C2};
}

}  // namespace fracriccati
