#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace pubsim {

/// One output cell: counts stay integral, measurements are doubles.
using Cell = std::variant<long long, double, std::string>;

/// A rectangular report, the common shape behind every CSV/JSON output.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
};

/// RFC-4180-style CSV: header row, comma separators, LF line endings.
/// Doubles print with fixed 6-decimal precision, integers print plain.
std::string to_csv(const Table& table);

/// Array of row objects keyed by the header.
std::string to_json(const Table& table);

} // namespace pubsim
