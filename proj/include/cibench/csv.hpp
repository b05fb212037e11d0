#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cibench::csv {

using Record = std::vector<std::string>;

/// Parses RFC 4180 text (quoted fields, doubled quotes, CRLF or LF).
/// Blank lines are skipped. Throws Error{MalformedCsv} on an unterminated
/// quote or stray characters after a closing quote.
std::vector<Record> parse(std::string_view text);

std::string escape(std::string_view field);

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double value);

/// Empty (after trimming) cell -> nullopt. Throws Error{MalformedCsv}
/// when the cell is not a finite decimal number.
std::optional<double> parse_number(std::string_view cell, std::string_view column);

}  // namespace cibench::csv
