#include "fracriccati/commands.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "fracriccati/errors.hpp"
#include "fracriccati/odeverify.hpp"
#include "fracriccati/specfun.hpp"

namespace fracriccati::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Sums terms produced by `term(k)` until they are negligible past k_min.
template <class Term>
double sum_series(Term term, int k_min) {
  double sum = 0.0;
  double largest = 0.0;
  for (int k = 0; k < 400; ++k) {
    const double t = term(k);
    sum += t;
    largest = std::max(largest, std::abs(sum));
    if (k > k_min && std::abs(t) <= 1e-17 * largest) break;
  }
  return sum;
}

}  // namespace

FunctionSource FunctionSource::power(double a) {
  if (!(a > -1.0)) throw DomainError("fracderiv: power exponent must exceed -1");
  return {Kind::Power, a, {}};
}

FunctionSource FunctionSource::builtin(const std::string& spec) {
  if (spec == "sin") return {Kind::Sine, 0.0, {}};
  if (spec == "exp") return {Kind::Exp, 0.0, {}};
  if (spec.rfind("poly:", 0) == 0) {
    std::vector<double> coeffs;
    std::stringstream ss(spec.substr(5));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        coeffs.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw DomainError("fracderiv: bad polynomial coefficient '" + item + "'");
      }
    }
    if (coeffs.empty()) throw DomainError("fracderiv: poly: needs at least one coefficient");
    return {Kind::Poly, 0.0, coeffs};
  }
  throw DomainError("fracderiv: unknown builtin '" + spec + "' (expected sin, exp or poly:c0,c1,...)");
}

RealFunction FunctionSource::function() const {
  switch (kind_) {
    case Kind::Power:
      return RealFunction::monomial(a_);
    case Kind::Sine:
      return RealFunction::sine();
    case Kind::Exp:
      return RealFunction::exponential();
    case Kind::Poly:
      return RealFunction::polynomial(coeffs_);
  }
  throw DomainError("fracderiv: unknown source");
}

double FunctionSource::oracle(double beta, double x) const {
  using specfun::rgamma;
  switch (kind_) {
    case Kind::Power:
      return fracops::power_rule(a_, beta, x);
    case Kind::Sine:
      // sin t = Σ (-1)^m t^{2m+1}/(2m+1)!
      return sum_series(
          [&](int m) { return (m % 2 ? -1.0 : 1.0) * std::pow(x, 2 * m + 1 - beta) * rgamma(2 * m + 2 - beta); },
          static_cast<int>(x));
    case Kind::Exp:
      return sum_series([&](int k) { return std::pow(x, k - beta) * rgamma(k + 1 - beta); }, static_cast<int>(2 * x));
    case Kind::Poly: {
      double sum = 0.0;
      for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] != 0.0) sum += coeffs_[k] * fracops::power_rule(static_cast<double>(k), beta, x);
      }
      return sum;
    }
  }
  return kNaN;
}

OutputTable fracderiv_table(const FunctionSource& source, double beta, const GridSpec& grid, const QuadratureSpec& q) {
  grid.require_positive();
  const RealFunction f = source.function();
  OutputTable table({"x", "numeric", "oracle", "abs_err"});
  for (double x : grid.values()) {
    const double numeric = fracops::rl_derivative(f, beta, x, q);
    const double oracle = source.oracle(beta, x);
    table.add_row({x, numeric, oracle, std::abs(numeric - oracle)});
  }
  return table;
}

OutputTable riccati_eval_table(const riccati::RiccatiParams& rp, riccati::Branch branch, const GridSpec& grid) {
  grid.require_positive();
  OutputTable table({"x", "u", "pole"});
  for (double x : grid.values()) {
    const riccati::SolutionEval u = riccati::eval_u(rp, branch, x);
    table.add_row({x, u.pole ? kNaN : u.value, u.pole ? 1.0 : 0.0});
  }
  return table;
}

OutputTable riccati_poles_table(const riccati::RiccatiParams& rp, riccati::Branch branch, const GridSpec& grid) {
  grid.require_positive();
  OutputTable table({"x"});
  for (double x : riccati::find_poles(rp, grid.start, grid.stop, branch)) table.add_row({x});
  return table;
}

VerifyReport riccati_verify(const riccati::RiccatiParams& rp, riccati::Branch branch, double x0, double x1,
                            int points) {
  if (!(x0 > 0.0) || !(x1 > x0)) throw DomainError("verify: need 0 < x0 < x1");
  if (points < 2) throw DomainError("verify: need at least two stations");
  const auto poles = riccati::find_poles(rp, x0, x1, branch);
  if (!poles.empty()) {
    throw PoleInIntervalError("verify: the interval contains a pole at x=" + OutputTable::format(poles.front()));
  }
  auto closed = [&](double x) { return riccati::eval_u(rp, branch, x).value; };

  VerifyReport report{0.0, 0.0, 0.0};
  double u_int = closed(x0);
  odeverify::LinearState lin{1.0, rp.a * u_int};
  double x_prev = x0;
  for (int i = 0; i < points; ++i) {
    const double x = i + 1 == points ? x1 : x0 + (x1 - x0) * i / (points - 1);
    const double u = closed(x);
    const double du = odeverify::fd_derivative(closed, x);
    const double scale = 1.0 + std::abs(riccati::forcing(rp, x));
    report.max_residual = std::max(report.max_residual, std::abs(riccati::residual(rp, x, u, du)) / scale);
    if (x > x_prev) {
      u_int = odeverify::integrate_riccati(rp, {x_prev, u_int, x});
      lin = odeverify::integrate_linear(rp, {x_prev, lin, x});
    }
    report.max_deviation = std::max(report.max_deviation, std::abs(u_int - u) / (1.0 + std::abs(u)));
    const double u_lin = lin.dy / (rp.a * lin.y);
    report.max_linear_deviation = std::max(report.max_linear_deviation, std::abs(u_lin - u) / (1.0 + std::abs(u)));
    x_prev = x;
  }
  return report;
}

OutputTable verify_table(const VerifyReport& report) {
  OutputTable table({"max_residual", "max_deviation", "max_linear_deviation"});
  table.add_row({report.max_residual, report.max_deviation, report.max_linear_deviation});
  return table;
}

OutputTable cosmo_hubble_table(const cosmo::CosmoParams& cp, riccati::Branch branch, const GridSpec& eta_grid) {
  eta_grid.require_positive();
  OutputTable table({"eta", "H", "pole"});
  for (double eta : eta_grid.values()) {
    const cosmo::HubbleEval h = cosmo::hubble_any(cp, eta, branch);
    table.add_row({eta, h.pole ? kNaN : h.H, h.pole ? 1.0 : 0.0});
  }
  return table;
}

OutputTable cosmo_scale_table(const cosmo::CosmoParams& cp, riccati::Branch branch, const GridSpec& eta_grid,
                              double eta_ref) {
  eta_grid.require_positive();
  OutputTable table({"eta", "R_ratio"});
  for (double eta : eta_grid.values()) table.add_row({eta, cosmo::scale_factor(cp, eta, eta_ref, branch)});
  return table;
}

OutputTable cosmo_figure_table(double c, int k, riccati::Branch branch, const GridSpec& eta_grid,
                               const GridSpec& delta_grid) {
  eta_grid.require_positive();
  delta_grid.require_delta_axis();
  const std::vector<double> etas = eta_grid.values();
  const std::vector<double> deltas = delta_grid.values();

  struct Cell {
    double H;
    bool pole;
  };
  std::vector<std::vector<Cell>> cells(deltas.size(), std::vector<Cell>(etas.size()));
  for (std::size_t d = 0; d < deltas.size(); ++d) {
    const cosmo::CosmoParams cp = cosmo::CosmoParams::make(c, std::nullopt, k, deltas[d]);
    std::vector<double> denom;
    bool oscillatory = false;
    if (k != 0) {
      const riccati::BesselMap m = riccati::map_params(cp.riccati_params());
      oscillatory = m.regime == riccati::Regime::Oscillatory;
      if (oscillatory) {
        for (double eta : etas) denom.push_back(specfun::bessel(m.kind(branch), m.n, m.q_mag * std::pow(eta, m.r)));
      }
    }
    for (std::size_t e = 0; e < etas.size(); ++e) {
      const cosmo::HubbleEval h = cosmo::hubble_any(cp, etas[e], branch);
      cells[d][e] = {h.H, h.pole};
    }
    if (oscillatory) {
      for (std::size_t e = 1; e < etas.size(); ++e) {
        if (std::signbit(denom[e - 1]) != std::signbit(denom[e])) {
          const std::size_t near = std::abs(denom[e - 1]) < std::abs(denom[e]) ? e - 1 : e;
          cells[d][near].pole = true;
        }
      }
    }
  }

  OutputTable table({"eta", "delta", "H", "pole"});
  for (std::size_t e = 0; e < etas.size(); ++e) {
    for (std::size_t d = 0; d < deltas.size(); ++d) {
      const Cell& cell = cells[d][e];
      table.add_row({etas[e], deltas[d], cell.pole ? kNaN : cell.H, cell.pole ? 1.0 : 0.0});
    }
  }
  return table;
}

}  // namespace fracriccati::cli
