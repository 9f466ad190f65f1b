#include "pubsim/table.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>

namespace pubsim {

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string cell_to_string(const Cell& cell) {
    if (const auto* i = std::get_if<long long>(&cell)) {
        return std::to_string(*i);
    }
    if (const auto* d = std::get_if<double>(&cell)) {
        return format_double(*d);
    }
    return csv_escape(std::get<std::string>(cell));
}

} // namespace

std::string to_csv(const Table& table) {
    std::string out;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i > 0) out += ',';
        out += csv_escape(table.header[i]);
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out += ',';
            out += cell_to_string(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size() && i < table.header.size(); ++i) {
            const Cell& cell = row[i];
            if (const auto* v = std::get_if<long long>(&cell)) {
                obj[table.header[i]] = *v;
            } else if (const auto* d = std::get_if<double>(&cell)) {
                obj[table.header[i]] = *d;
            } else {
                obj[table.header[i]] = std::get<std::string>(cell);
            }
        }
        rows.push_back(std::move(obj));
    }
    return rows.dump(2) + "\n";
}

} // namespace pubsim
