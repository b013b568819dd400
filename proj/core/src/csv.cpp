#include "levymd/csv.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace levymd {

namespace {

std::string quote_if_needed(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace

Cell Cell::number(double v) { return Cell{Kind::Number, v, {}}; }

Cell Cell::label(std::string s) { return Cell{Kind::Text, 0.0, std::move(s)}; }

void Table::add(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::logic_error("table row width does not match the header");
    }
    rows.push_back(std::move(row));
}

std::string format_number(double v) {
    if (std::isnan(v)) throw std::logic_error("output value is NaN");
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string render_csv(const Table& table) {
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i > 0) out += ',';
        out += quote_if_needed(table.columns[i]);
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out += ',';
            out += row[i].kind == Cell::Kind::Number ? format_number(row[i].num)
                                                     : quote_if_needed(row[i].text);
        }
        out += '\n';
    }
    return out;
}

std::string render_json(const Table& table, const std::string& config_echo, std::uint64_t seed,
                        const std::string& version) {
    nlohmann::json doc;
    doc["meta"]["config"] =
        config_echo.empty() ? nlohmann::json(nullptr) : nlohmann::json::parse(config_echo);
    doc["meta"]["seed"] = seed;
    doc["meta"]["version"] = version;
    doc["columns"] = table.columns;
    auto rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        auto jrow = nlohmann::json::array();
        for (const auto& cell : row) {
            if (cell.kind == Cell::Kind::Text) {
                jrow.push_back(cell.text);
            } else if (std::isnan(cell.num)) {
                throw std::logic_error("output value is NaN");
            } else if (std::isinf(cell.num)) {
                jrow.push_back(cell.num > 0 ? "inf" : "-inf");
            } else {
                jrow.push_back(cell.num);
            }
        }
        rows.push_back(std::move(jrow));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out) throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace levymd
