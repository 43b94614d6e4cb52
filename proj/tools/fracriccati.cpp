// fracriccati: fractional operators, δ-modified Riccati solutions and their
// cosmological tables from the command line.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fracriccati/acceptance.hpp"
#include "fracriccati/commands.hpp"
#include "fracriccati/errors.hpp"

namespace {

using namespace fracriccati;

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kNoConvergence = 3, kPoleInInterval = 4, kZeroCoupling = 5 };

riccati::Branch parse_branch(int b) {
  if (b != 1 && b != 2) throw DomainError("--branch must be 1 or 2");
  return static_cast<riccati::Branch>(b);
}

void emit(const OutputTable& table, const std::string& out_path) {
  if (out_path.empty()) {
    table.write(std::cout);
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw DomainError("cannot open output file " + out_path);
  table.write(file);
  if (!file.flush()) throw DomainError("failed writing " + out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional Riemann-Liouville operators and delta-modified Riccati equations"};
  app.require_subcommand(1);

  std::string out;
  std::string grid;

  // fracderiv
  auto* fd = app.add_subcommand("fracderiv", "Riemann-Liouville derivative of a test function on a grid");
  double beta = 0.0;
  std::optional<double> power;
  std::string builtin;
  double tol = 1e-8;
  fd->add_option("--beta", beta, "Order, 0 <= beta < 2")->required();
  auto* power_opt = fd->add_option("--power", power, "Differentiate t^a");
  auto* builtin_opt = fd->add_option("--builtin", builtin, "sin, exp or poly:c0,c1,...");
  power_opt->excludes(builtin_opt);
  fd->add_option("--grid", grid, "x grid start:stop:count")->required();
  fd->add_option("--tol", tol, "Quadrature tolerance")->capture_default_str();
  fd->add_option("--out", out, "Output file (default stdout)");

  // riccati
  auto* ric = app.add_subcommand("riccati", "Closed-form solutions of u' + a u^2 = b x^(1-delta)/Gamma(2-delta)");
  ric->require_subcommand(1);
  double a = 1.0, b = 0.0, delta = 1.0, x0 = 0.0, x1 = 0.0;
  int branch = 1;
  int points = 50;
  auto common_riccati = [&](CLI::App* sub) {
    sub->add_option("--a", a, "Coefficient a (nonzero)")->required();
    sub->add_option("--b", b, "Coefficient b")->required();
    sub->add_option("--delta", delta, "Scheme parameter in (0, 1]")->required();
    sub->add_option("--branch", branch, "1 (J/I) or 2 (Y/K)")->capture_default_str();
    sub->add_option("--out", out, "Output file (default stdout)");
  };
  auto* ric_eval = ric->add_subcommand("eval", "Tabulate u on a grid");
  common_riccati(ric_eval);
  ric_eval->add_option("--grid", grid, "x grid start:stop:count")->required();
  auto* ric_poles = ric->add_subcommand("poles", "List the poles in [start, stop]");
  common_riccati(ric_poles);
  ric_poles->add_option("--grid", grid, "x range start:stop:count")->required();
  auto* ric_verify = ric->add_subcommand("verify", "Check the closed form against numerical integration");
  common_riccati(ric_verify);
  ric_verify->add_option("--x0", x0, "Interval start")->required();
  ric_verify->add_option("--x1", x1, "Interval end")->required();
  ric_verify->add_option("--points", points, "Comparison stations")->capture_default_str();

  // cosmo
  auto* cos = app.add_subcommand("cosmo", "FRW Hubble parameter in conformal time");
  cos->require_subcommand(1);
  int k = 1;
  std::optional<double> c, gamma;
  double eta_ref = 1.0;
  std::string delta_grid = "0.05:1:20";
  auto common_cosmo = [&](CLI::App* sub, bool with_delta) {
    sub->add_option("--k", k, "Curvature index -1, 0 or 1")->required();
    sub->add_option("--c", c, "c = 1.5 gamma - 1");
    sub->add_option("--gamma", gamma, "Adiabatic index");
    if (with_delta) sub->add_option("--delta", delta, "Scheme parameter in (0, 1]")->capture_default_str();
    sub->add_option("--branch", branch, "1 (J/I) or 2 (Y/K)")->capture_default_str();
    sub->add_option("--grid", grid, "eta grid start:stop:count")->required();
    sub->add_option("--out", out, "Output file (default stdout)");
  };
  auto* cos_hubble = cos->add_subcommand("hubble", "Tabulate H(eta)");
  common_cosmo(cos_hubble, true);
  auto* cos_scale = cos->add_subcommand("scale", "Tabulate R(eta)/R(eta_ref)");
  common_cosmo(cos_scale, true);
  cos_scale->add_option("--eta-ref", eta_ref, "Reference conformal time")->capture_default_str();
  auto* cos_figure = cos->add_subcommand("figure", "H over an (eta, delta) lattice");
  common_cosmo(cos_figure, false);
  cos_figure->add_option("--delta-grid", delta_grid, "delta grid start:stop:count")->capture_default_str();

  // selftest
  auto* self = app.add_subcommand("selftest", "Run the acceptance suite");
  double perturb = 0.0;
  self->add_option("--perturb-gamma", perturb, "Test hook: perturb the oracle gamma by (1 + p x)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*fd) {
      if (!power && builtin.empty()) throw DomainError("fracderiv: one of --power or --builtin is required");
      const cli::FunctionSource source =
          power ? cli::FunctionSource::power(*power) : cli::FunctionSource::builtin(builtin);
      QuadratureSpec q;
      q.tol = tol;
      emit(cli::fracderiv_table(source, beta, GridSpec::parse(grid), q), out);
    } else if (*ric) {
      const auto rp = riccati::RiccatiParams::make(a, b, delta);
      const riccati::Branch br = parse_branch(branch);
      if (*ric_eval) emit(cli::riccati_eval_table(rp, br, GridSpec::parse(grid)), out);
      if (*ric_poles) emit(cli::riccati_poles_table(rp, br, GridSpec::parse(grid)), out);
      if (*ric_verify) emit(cli::verify_table(cli::riccati_verify(rp, br, x0, x1, points)), out);
    } else if (*cos) {
      const riccati::Branch br = parse_branch(branch);
      if (*cos_figure) {
        const double cv = cosmo::CosmoParams::make(c, gamma, k, 1.0).c();
        emit(cli::cosmo_figure_table(cv, k, br, GridSpec::parse(grid), GridSpec::parse(delta_grid)), out);
      } else {
        const auto cp = cosmo::CosmoParams::make(c, gamma, k, delta);
        if (*cos_hubble) emit(cli::cosmo_hubble_table(cp, br, GridSpec::parse(grid)), out);
        if (*cos_scale) emit(cli::cosmo_scale_table(cp, br, GridSpec::parse(grid), eta_ref), out);
      }
    } else if (*self) {
      acceptance::Options options;
      options.gamma_perturbation = perturb;
      return acceptance::run_and_report(options, std::cout) ? kOk : kFailure;
    }
  } catch (const cosmo::ZeroCouplingError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kZeroCoupling;
  } catch (const cli::PoleInIntervalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPoleInInterval;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNoConvergence;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
