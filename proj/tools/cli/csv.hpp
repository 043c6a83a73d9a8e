#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace lomnitz::cli {

/// Header, rows and '#' comment lines of one emitted curve or report.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> comments;  ///< Without the leading "# ".

  void add_row(const std::vector<double>& values);
};

/// 12 significant digits, '.' separator, independent of the global locale.
std::string format_number(double value);
/// Shortest round-trip form, used for column labels such as psi_nu=0.25.
std::string format_label(double value);
/// Locale-independent parse; throws std::invalid_argument on malformed input.
double parse_number(std::string_view text);

void write_csv(const Table& table, std::ostream& out);
void write_aligned(const Table& table, std::ostream& out);
Table read_csv(std::istream& in);

/// Column `name` of a parsed table as numbers.
std::vector<double> numeric_column(const Table& table, std::string_view name);

}  // namespace lomnitz::cli
