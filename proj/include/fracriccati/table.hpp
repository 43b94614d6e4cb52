#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fracriccati {

/// Uniform lattice `start:stop:count` with inclusive endpoints.
struct GridSpec {
  double start;
  double stop;
  int count;

  /// Parses "start:stop:count". Throws DomainError on malformed input,
  /// start >= stop or count < 2.
  static GridSpec parse(std::string_view text);

  std::vector<double> values() const;
  double spacing() const { return (stop - start) / (count - 1); }

  /// Axis checks: η axes need start > 0, δ axes need values in (0, 1].
  void require_positive() const;
  void require_delta_axis() const;
};

/// Comma-separated table with a single `#` header line.
///
/// Values are written with 17 significant digits so they round-trip exactly;
/// NaN is written as the literal `nan`.
class OutputTable {
 public:
  explicit OutputTable(std::vector<std::string> columns);

  void add_row(std::vector<double> row);
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }

  void write(std::ostream& out) const;
  std::string str() const;

  static std::string format(double v);

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
};

}  // namespace fracriccati
