#include "fracriccati/table.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>

#include "fracriccati/errors.hpp"

namespace fracriccati {

namespace {

double parse_number(std::string_view s, std::string_view whole) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw DomainError("grid: cannot parse '" + std::string(s) + "' in '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

GridSpec GridSpec::parse(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
    throw DomainError("grid: expected start:stop:count, got '" + std::string(text) + "'");
  }
  GridSpec g{};
  g.start = parse_number(text.substr(0, first), text);
  g.stop = parse_number(text.substr(first + 1, second - first - 1), text);
  const double count = parse_number(text.substr(second + 1), text);
  if (count != std::floor(count) || count < 2 || count > 1e7) {
    throw DomainError("grid: count must be an integer >= 2 in '" + std::string(text) + "'");
  }
  g.count = static_cast<int>(count);
  if (!std::isfinite(g.start) || !std::isfinite(g.stop) || !(g.start < g.stop)) {
    throw DomainError("grid: need finite start < stop in '" + std::string(text) + "'");
  }
  return g;
}

std::vector<double> GridSpec::values() const {
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = start + (stop - start) * i / (count - 1);
  v.back() = stop;
  return v;
}

void GridSpec::require_positive() const {
  if (!(start > 0.0)) throw DomainError("grid: this axis must start above 0");
}

void GridSpec::require_delta_axis() const {
  if (!(start > 0.0) || stop > 1.0) throw DomainError("grid: delta values must lie in (0, 1]");
}

OutputTable::OutputTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void OutputTable::add_row(std::vector<double> row) {
  if (row.size() != columns_.size()) throw DomainError("table: row width does not match the header");
  rows_.push_back(std::move(row));
}

std::string OutputTable::format(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void OutputTable::write(std::ostream& out) const {
  out << '#';
  for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : " ") << columns_[i];
  out << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format(row[i]);
    out << '\n';
  }
}

std::string OutputTable::str() const {
  std::ostringstream os;
  write(os);
  return os.str();
}

}  // namespace fracriccati
