#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fenchel {

// Shortest decimal string that round-trips to the same double (to_chars).
std::string format_double(double x);

// '#'-prefixed header naming the columns, comma separated, LF terminated.
void csv_header(std::ostream& os, std::initializer_list<std::string_view> columns);
void csv_comment(std::ostream& os, std::string_view text);
void csv_row(std::ostream& os, std::span<const double> cells);

struct CsvParseError : std::runtime_error {
    std::size_t line;
    CsvParseError(std::size_t line_, const std::string& what_)
        : std::runtime_error(what_), line(line_) {}
};

// Parses a two-column (x, f) CSV; '#' lines and blank lines are skipped.
// Throws CsvParseError (1-based line number) on malformed input.
std::pair<std::vector<double>, std::vector<double>> parse_xy_csv(std::istream& is);

}  // namespace fenchel
