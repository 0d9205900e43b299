#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>

namespace leodoppler {

/// Shortest general-format text with 9 significant digits, '.' separator,
/// independent of the C locale.
std::string format_number(double value);

/// Writes the values comma-separated and terminated by '\n'.
void write_csv_row(std::ostream& out, std::initializer_list<double> values);

}  // namespace leodoppler
