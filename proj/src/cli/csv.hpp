#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace fracwave::cli {

/// 17 significant digits (general format) with a decimal
/// point regardless of locale. Round-trips exactly through strtod.
std::string format_double(double value);

/// Same, with a caller-chosen number of significant digits.
std::string format_double(double value, int significant_digits);

void write_csv_row(std::ostream& out, const std::vector<double>& values);
void write_csv_header(std::ostream& out, const std::vector<std::string_view>& names);

/// Locale-independent parse; throws std::invalid_argument on malformed input.
double parse_double(std::string_view text);

}  // namespace fracwave::cli
