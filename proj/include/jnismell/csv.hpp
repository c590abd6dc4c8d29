#ifndef JNISMELL_CSV_HPP
#define JNISMELL_CSV_HPP

#include <string>
#include <vector>

namespace jnismell {

// RFC 4180 quoting: fields containing comma, quote, CR or LF are quoted and
// embedded quotes doubled.
std::string csv_field(const std::string& value);
std::string csv_row(const std::vector<std::string>& fields);

// Parses CSV text into rows of fields (handles quoted fields and doubled
// quotes; accepts LF and CRLF line ends).
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

// Fixed-point with `digits` decimals, the format used for ratio columns.
std::string format_fixed(double value, int digits);

}  // namespace jnismell

#endif
