#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace projineq::cli {

/// Header plus data rows of an RFC 4180 style document.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Index of `name` in the header; throws InputError(MalformedInput) if absent.
    std::size_t column_index(std::string_view name) const;
    /// Parses every cell of column `name` as a finite real with '.' decimal point.
    /// Errors name the 1-based data row and the column.
    std::vector<double> numeric_column(std::string_view name) const;
};

/// Comma separated, optional double-quoted fields with "" escapes, LF or CRLF line ends.
/// A header row is required; blank lines are skipped; every row must match the header width.
CsvTable parse_csv(std::string_view text);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

} // namespace projineq::cli
