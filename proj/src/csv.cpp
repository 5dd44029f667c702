#include "fenchel/csv.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>

namespace fenchel {

std::string format_double(double x) {
    std::array<char, 32> buf;
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), end);
}

void csv_header(std::ostream& os, std::initializer_list<std::string_view> columns) {
    os << "# ";
    bool first = true;
    for (auto c : columns) {
        if (!first) os << ',';
        os << c;
        first = false;
    }
    os << '\n';
}

void csv_comment(std::ostream& os, std::string_view text) { os << "# " << text << '\n'; }

void csv_row(std::ostream& os, std::span<const double> cells) {
    bool first = true;
    for (double c : cells) {
        if (!first) os << ',';
        os << format_double(c);
        first = false;
    }
    os << '\n';
}

namespace {

bool parse_cell(std::string_view cell, double& out) {
    std::size_t b = 0, e = cell.size();
    while (b < e && std::isspace(static_cast<unsigned char>(cell[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(cell[e - 1]))) --e;
    if (b == e) return false;
    const auto [ptr, ec] = std::from_chars(cell.data() + b, cell.data() + e, out);
    return ec == std::errc{} && ptr == cell.data() + e;
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> parse_xy_csv(std::istream& is) {
    std::vector<double> xs, ys;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view sv(line);
        std::size_t b = 0;
        while (b < sv.size() && std::isspace(static_cast<unsigned char>(sv[b]))) ++b;
        if (b == sv.size() || sv[b] == '#') continue;

        const std::size_t comma = sv.find(',');
        if (comma == std::string_view::npos)
            throw CsvParseError(lineno, "expected two comma-separated columns");
        double x, y;
        if (!parse_cell(sv.substr(0, comma), x))
            throw CsvParseError(lineno, "malformed number in column 1");
        if (!parse_cell(sv.substr(comma + 1), y))
            throw CsvParseError(lineno, "malformed number in column 2");
        xs.push_back(x);
        ys.push_back(y);
    }
    return {std::move(xs), std::move(ys)};
}

}  // namespace fenchel
