#pragma once

// The end-to-end acceptance suite run by `fracriccati selftest` and by the
// acceptance test binary. Each criterion compares library output against an
// oracle computed here from std::tgamma and elementary functions.

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace fracriccati::acceptance {

struct Options {
  /// Test hook: the oracle gamma becomes Γ(x)(1 + p x). Any p ≠ 0 large
  /// enough to matter must make the gamma-based criteria fail.
  double gamma_perturbation = 0.0;
};

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;  // worst observed error against its bound
};

using Criterion = std::function<CriterionResult(const Options&)>;

/// The nine criteria in order.
const std::vector<Criterion>& criteria();

std::vector<CriterionResult> run(const Options& options = {});

/// "[PASS] 3 constant reduction: ..." style line, no trailing newline.
std::string format(const CriterionResult& result);

/// Runs every criterion, writes one line per criterion, returns true when all pass.
bool run_and_report(const Options& options, std::ostream& out);

}  // namespace fracriccati::acceptance
