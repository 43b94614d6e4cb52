#include "fracriccati/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "fracriccati/commands.hpp"
#include "fracriccati/cosmo.hpp"
#include "fracriccati/errors.hpp"
#include "fracriccati/fracops.hpp"
#include "fracriccati/odeverify.hpp"
#include "fracriccati/riccati.hpp"
#include "fracriccati/specfun.hpp"

namespace fracriccati::acceptance {

namespace {

using riccati::Branch;
using specfun::BesselKind;

// Tracks the worst ratio error/bound over a sweep; the check passes when it
// stays at or below 1.
class Worst {
 public:
  void add(double error, double bound, const std::string& where) {
    const double ratio = std::isfinite(error) ? error / bound : HUGE_VAL;
    if (count_ == 0 || ratio > worst_ratio_) {
      worst_ratio_ = ratio;
      error_ = error;
      bound_ = bound;
      where_ = where;
    }
    ++count_;
  }
  void fail(const std::string& why) {
    failed_ = true;
    where_ = why;
  }
  bool ok() const { return !failed_ && count_ > 0 && worst_ratio_ <= 1.0; }
  std::string detail() const {
    if (failed_) return where_;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%d checks, worst %.3e vs bound %.1e at %s", count_, error_, bound_,
                  where_.c_str());
    return buf;
  }

 private:
  int count_ = 0;
  bool failed_ = false;
  double worst_ratio_ = 0.0;
  double error_ = 0.0;
  double bound_ = 0.0;
  std::string where_;
};

std::string at(std::initializer_list<std::pair<const char*, double>> items) {
  std::string s;
  for (const auto& [name, v] : items) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%s=%g", s.empty() ? "" : " ", name, v);
    s += buf;
  }
  return s;
}

double oracle_gamma(const Options& o, double x) { return std::tgamma(x) * (1.0 + o.gamma_perturbation * x); }

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1 == n ? hi : lo + (hi - lo) * i / (n - 1);
  return v;
}

CriterionResult finish(int id, const char* name, const Worst& w) { return {id, name, w.ok(), w.detail()}; }

// The (a, b, δ) matrix of the Riccati checks.
std::vector<riccati::RiccatiParams> riccati_matrix() {
  std::vector<riccati::RiccatiParams> out;
  for (double a : {1.0, 2.0, -1.0}) {
    for (double b : {1.0, -1.0, 2.0, -2.0}) {
      for (double d : {0.25, 0.5, 0.75, 1.0}) out.push_back(riccati::RiccatiParams::make(a, b, d));
    }
  }
  return out;
}

double oracle_forcing(const Options& o, const riccati::RiccatiParams& rp, double x) {
  const double d = rp.delta.delta();
  return rp.b * std::pow(x, 1.0 - d) / oracle_gamma(o, 2.0 - d);
}

CriterionResult lacroix(const Options&) {
  Worst w;
  const RealFunction f = RealFunction::monomial(1.0);
  for (double x : {0.25, 1.0, 4.0}) {
    const double expected = 2.0 * std::sqrt(x) / std::sqrt(std::numbers::pi);
    const double got = fracops::rl_derivative(f, 0.5, x);
    w.add(std::abs(got - expected) / expected, 1e-6, at({{"x", x}}));
  }
  return finish(1, "half-derivative of x equals 2 sqrt(x)/sqrt(pi)", w);
}

CriterionResult power_rule_matrix(const Options& o) {
  Worst w;
  for (double a : {1.0, 2.0, 2.5}) {
    const RealFunction f = RealFunction::monomial(a);
    for (double beta : {0.3, 0.5, 0.7}) {
      for (double x : {0.5, 1.0, 4.0}) {
        const double expected = oracle_gamma(o, a + 1.0) / oracle_gamma(o, a + 1.0 - beta) * std::pow(x, a - beta);
        const double got = fracops::rl_derivative(f, beta, x);
        w.add(std::abs(got - expected) / std::abs(expected), 1e-6, at({{"a", a}, {"beta", beta}, {"x", x}}));
      }
    }
  }
  return finish(2, "power rule over the 3x3x3 matrix", w);
}

CriterionResult constant_reduction(const Options& o) {
  Worst w;
  for (double b : {1.0, -2.0}) {
    const RealFunction f = RealFunction::constant(b);
    for (double d : {0.25, 0.5, 0.9}) {
      for (double x : {0.5, 1.0, 4.0}) {
        const double expected = b * std::pow(x, 1.0 - d) / oracle_gamma(o, 2.0 - d);
        const double got = fracops::rl_integral(f, 1.0 - d, x);
        w.add(std::abs(got - expected) / std::abs(expected), 1e-8, at({{"b", b}, {"delta", d}, {"x", x}}));
      }
    }
  }
  return finish(3, "fractional integral of a constant", w);
}

CriterionResult bessel_identities(const Options&) {
  Worst w;
  const std::vector<double> xs = linspace(0.1, 50.0, 120);
  for (double nu : {0.3, 0.4, 0.5, 1.7}) {
    for (double x : xs) {
      const std::string where = at({{"nu", nu}, {"x", x}});
      const double jm = specfun::bessel(BesselKind::J, nu - 1, x);
      const double j = specfun::bessel(BesselKind::J, nu, x);
      const double jp = specfun::bessel(BesselKind::J, nu + 1, x);
      const double scale = std::max({std::abs(jm), std::abs(jp), std::abs(2 * nu / x * j)});
      w.add(std::abs(jm + jp - 2 * nu / x * j) / scale, 1e-10, "recurrence " + where);

      for (BesselKind kind : {BesselKind::J, BesselKind::Y, BesselKind::I, BesselKind::K}) {
        const specfun::BesselDerivative d = specfun::bessel_derivative(kind, nu, x);
        const double mag = std::max({std::abs(d.lower_form), std::abs(d.upper_form), std::abs(d.value)});
        w.add(std::abs(d.lower_form - d.upper_form) / mag, 1e-10,
              std::string("derivative forms ") + specfun::to_string(kind) + " " + where);
      }

      const double y = specfun::bessel(BesselKind::Y, nu, x);
      const double dj = specfun::bessel_derivative(BesselKind::J, nu, x).value;
      const double dy = specfun::bessel_derivative(BesselKind::Y, nu, x).value;
      const double wronskian = 2.0 / (std::numbers::pi * x);
      w.add(std::abs(j * dy - dj * y - wronskian) / wronskian, 1e-9, "Wronskian " + where);
    }
  }
  for (double x : xs) {
    const double amp = std::sqrt(2.0 / (std::numbers::pi * x));
    const std::string where = at({{"x", x}});
    w.add(std::abs(specfun::bessel(BesselKind::J, 0.5, x) - amp * std::sin(x)) / amp, 1e-10, "J_1/2 " + where);
    w.add(std::abs(specfun::bessel(BesselKind::J, -0.5, x) - amp * std::cos(x)) / amp, 1e-10, "J_-1/2 " + where);
    const double sh = amp * std::sinh(x);
    const double ch = amp * std::cosh(x);
    w.add(std::abs(specfun::bessel(BesselKind::I, 0.5, x) - sh) / sh, 1e-10, "I_1/2 " + where);
    w.add(std::abs(specfun::bessel(BesselKind::I, -0.5, x) - ch) / ch, 1e-10, "I_-1/2 " + where);
  }
  return finish(4, "Bessel Wronskian, recurrence, derivative forms, half orders", w);
}

CriterionResult riccati_residual(const Options& o) {
  Worst w;
  const std::vector<double> xs = linspace(0.1, 5.0, 50);
  for (const riccati::RiccatiParams& rp : riccati_matrix()) {
    for (Branch branch : {Branch::First, Branch::Second}) {
      const std::vector<double> poles = riccati::find_poles(rp, 0.05, 5.05, branch);
      auto u = [&](double x) { return riccati::eval_u(rp, branch, x).value; };
      for (double x : xs) {
        const bool near_pole =
            std::any_of(poles.begin(), poles.end(), [x](double p) { return std::abs(x - p) < 0.05; });
        if (near_pole) continue;
        const double f = oracle_forcing(o, rp, x);
        const double v = u(x);
        const double res = odeverify::fd_derivative(u, x) + rp.a * v * v - f;
        w.add(std::abs(res), 1e-6 * (1.0 + std::abs(f)),
              at({{"a", rp.a}, {"b", rp.b}, {"delta", rp.delta.delta()}, {"branch", static_cast<int>(branch)},
                  {"x", x}}));
      }
    }
  }
  return finish(5, "closed-form Riccati residual, both branches", w);
}

// Longest pole-free piece of [lo, hi] keeping `margin` from every pole.
std::pair<double, double> pole_free_interval(const riccati::RiccatiParams& rp, Branch branch, double lo, double hi,
                                             double margin) {
  std::vector<double> cuts{lo - margin};
  for (double p : riccati::find_poles(rp, lo - margin, hi + margin, branch)) cuts.push_back(p);
  cuts.push_back(hi + margin);
  std::pair<double, double> best{0.0, 0.0};
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    const double a = std::max(lo, cuts[i - 1] + margin);
    const double b = std::min(hi, cuts[i] - margin);
    if (b - a > best.second - best.first) best = {a, b};
  }
  return best;
}

CriterionResult cross_oracle(const Options&) {
  Worst w;
  const odeverify::Tolerances tol{1e-12, 1e-14, 1'000'000};
  for (const riccati::RiccatiParams& rp : riccati_matrix()) {
    for (Branch branch : {Branch::First, Branch::Second}) {
      const auto [x0, x1] = pole_free_interval(rp, branch, 0.5, 2.5, 0.1);
      const std::string where = at({{"a", rp.a}, {"b", rp.b}, {"delta", rp.delta.delta()},
                                    {"branch", static_cast<int>(branch)}, {"x0", x0}, {"x1", x1}});
      if (!(x1 - x0 > 0.5)) {
        w.fail("no pole-free interval for " + where);
        continue;
      }
      const double u0 = riccati::eval_u(rp, branch, x0).value;
      const double closed = riccati::eval_u(rp, branch, x1).value;
      const double integrated = odeverify::integrate_riccati(rp, {x0, u0, x1, tol});
      w.add(std::abs(integrated - closed), 1e-6 * (1.0 + std::abs(closed)), "integration " + where);

      const odeverify::LinearState end = odeverify::integrate_linear(rp, {x0, {1.0, rp.a * u0}, x1, tol});
      const double linear = end.dy / (rp.a * end.y);
      w.add(std::abs(linear - integrated), 1e-7 * (1.0 + std::abs(integrated)), "linear route " + where);

    }
  }
  return finish(6, "closed form vs adaptive integration and the linear route", w);
}

CriterionResult classical_limits(const Options&) {
  Worst w;
  for (double c : {0.5, 1.0, 2.0}) {
    const cosmo::CosmoParams closed = cosmo::CosmoParams::make(c, std::nullopt, 1, 1.0);
    const cosmo::CosmoParams open = cosmo::CosmoParams::make(c, std::nullopt, -1, 1.0);
    const double hi = std::numbers::pi / (2.0 * c);
    for (int i = 0; i < 100; ++i) {
      const double eta = 0.05 + (hi - 0.05) * (i + 0.5) / 100.0;
      const double expected = 1.0 / std::tan(c * eta);
      const double got = cosmo::hubble(closed, eta).H;
      w.add(std::abs(got - expected), 1e-8 * (1.0 + std::abs(expected)), at({{"k", 1}, {"c", c}, {"eta", eta}}));
    }
    for (int i = 0; i < 100; ++i) {
      const double eta = 0.05 + (5.0 - 0.05) * (i + 0.5) / 100.0;
      const double expected = 1.0 / std::tanh(c * eta);
      const double got = cosmo::hubble(open, eta).H;
      w.add(std::abs(got - expected), 1e-8 * (1.0 + expected), at({{"k", -1}, {"c", c}, {"eta", eta}}));
    }
  }
  return finish(7, "delta = 1 gives cot (k=1) and coth (k=-1)", w);
}

CriterionResult figure_grids(const Options&) {
  Worst w;
  const double c = 1.0;
  struct Case {
    int k;
    const char* eta;
    const char* delta;
  };
  for (const Case& cs : {Case{1, "0.1:8:160", "0.05:1:20"}, Case{-1, "0.1:3:60", "0.1:1:10"}}) {
    const GridSpec eta_grid = GridSpec::parse(cs.eta);
    const GridSpec delta_grid = GridSpec::parse(cs.delta);
    const OutputTable table = cli::cosmo_figure_table(c, cs.k, Branch::First, eta_grid, delta_grid);
    const auto etas = eta_grid.values();
    const auto deltas = delta_grid.values();
    const auto& rows = table.rows();
    char label[64];
    std::snprintf(label, sizeof label, "k=%d", cs.k);
    if (rows.size() != etas.size() * deltas.size()) {
      w.fail(std::string(label) + ": row count " + std::to_string(rows.size()) + " differs from the lattice size");
      continue;
    }
    // Complete lattice in η-outer order, every row either a value or an explicit pole.
    std::vector<std::vector<double>> pole_etas(deltas.size());
    for (std::size_t e = 0; e < etas.size(); ++e) {
      for (std::size_t d = 0; d < deltas.size(); ++d) {
        const auto& row = rows[e * deltas.size() + d];
        const std::string where = std::string(label) + " " + at({{"eta", row[0]}, {"delta", row[1]}});
        if (row[0] != etas[e] || row[1] != deltas[d]) w.fail(where + ": lattice order broken");
        const bool pole = row[3] == 1.0;
        if (pole) {
          if (!std::isnan(row[2])) w.fail(where + ": pole row carries a value");
          pole_etas[d].push_back(row[0]);
        } else if (!std::isfinite(row[2])) {
          w.fail(where + ": silent non-finite value");
        }
        if (cs.k == -1) w.add(row[2] > 0.0 ? 0.0 : 1.0, 0.5, "positivity " + where);
      }
    }
    const double spacing = eta_grid.spacing();
    for (std::size_t d = 0; d < deltas.size(); ++d) {
      const cosmo::CosmoParams cp = cosmo::CosmoParams::make(c, std::nullopt, cs.k, deltas[d]);
      const auto roots = riccati::find_poles(cp.riccati_params(), eta_grid.start, eta_grid.stop);
      auto distance = [](double x, const std::vector<double>& set) {
        double best = HUGE_VAL;
        for (double s : set) best = std::min(best, std::abs(x - s));
        return best;
      };
      for (double p : pole_etas[d]) {
        w.add(distance(p, roots), spacing, std::string(label) + " pole row " + at({{"eta", p}, {"delta", deltas[d]}}));
      }
      for (double r : roots) {
        w.add(distance(r, pole_etas[d]), spacing, std::string(label) + " root " + at({{"eta", r}, {"delta", deltas[d]}}));
      }
    }
  }
  return finish(8, "figure grids complete, k=-1 positive, k=1 poles match find_poles", w);
}

CriterionResult operator_properties(const Options& o) {
  Worst w;
  // Fixed meshes: the profile is differentiated numerically, so it has to be
  // a smooth function of x rather than the output of an adaptive loop.
  const QuadratureSpec inner{512, 1e-8, 0};
  const QuadratureSpec outer{8192, 1e-8, 0};
  for (int degree : {0, 1, 2}) {
    const RealFunction f = RealFunction::monomial(degree);
    for (double alpha : {0.3, 0.5}) {
      const RealFunction profile([&f, alpha, inner](double t) { return fracops::rl_integral(f, alpha, t, inner); });
      for (double x : {0.5, 1.0, 2.0}) {
        const double expected = std::pow(x, degree);
        const double got = fracops::rl_derivative(profile, alpha, x, outer);
        w.add(std::abs(got - expected), 1e-5 * std::max(1.0, expected),
              "left inverse " + at({{"degree", degree}, {"alpha", alpha}, {"x", x}}));
      }
    }
  }
  for (double a : {1.0, 2.0}) {
    const RealFunction f = RealFunction::monomial(a);
    for (double alpha : {0.25, 0.5}) {
      for (double beta : {0.25, 0.5}) {
        const RealFunction inner_integral(
            [&f, beta](double t) { return fracops::rl_integral(f, beta, t, QuadratureSpec{2048, 1e-8, 0}); });
        for (double x : {0.5, 1.0, 2.0}) {
          const double s = alpha + beta;
          const double expected = oracle_gamma(o, a + 1.0) / oracle_gamma(o, a + 1.0 + s) * std::pow(x, a + s);
          const double got = fracops::rl_integral(inner_integral, alpha, x, QuadratureSpec{2048, 1e-8, 0});
          w.add(std::abs(got - expected), 1e-6 * std::max(1.0, std::abs(expected)),
                "semigroup " + at({{"a", a}, {"alpha", alpha}, {"beta", beta}, {"x", x}}));
        }
      }
    }
  }
  return finish(9, "left inverse and semigroup", w);
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{lacroix,          power_rule_matrix, constant_reduction,
                                          bessel_identities, riccati_residual, cross_oracle,
                                          classical_limits, figure_grids,      operator_properties};
  return all;
}

namespace {

CriterionResult run_one(const Criterion& c, int id, const Options& options) {
  try {
    return c(options);
  } catch (const std::exception& e) {
    return {id, "criterion", false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

std::vector<CriterionResult> run(const Options& options) {
  std::vector<CriterionResult> out;
  for (const Criterion& c : criteria()) out.push_back(run_one(c, static_cast<int>(out.size()) + 1, options));
  return out;
}

std::string format(const CriterionResult& r) {
  return std::string(r.passed ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.name + ": " + r.detail;
}

bool run_and_report(const Options& options, std::ostream& out) {
  bool all = true;
  int id = 0;
  for (const Criterion& c : criteria()) {
    const CriterionResult r = run_one(c, ++id, options);
    out << format(r) << std::endl;
    all = all && r.passed;
  }
  return all;
}

}  // namespace fracriccati::acceptance
