#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace levymd {

// One output cell: a double or a short label.  Numbers render with %.17g so
// equal doubles always produce identical bytes; +inf renders as "inf"; NaN
// is treated as a producer bug and rejected.
struct Cell {
    enum class Kind { Number, Text };
    Kind kind = Kind::Number;
    double num = 0.0;
    std::string text;

    [[nodiscard]] static Cell number(double v);
    [[nodiscard]] static Cell label(std::string s);
};

// Rectangular result set shared by every subcommand.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row);  // throws std::logic_error on width mismatch
};

[[nodiscard]] std::string format_number(double v);

// Comma-separated, header row, LF line endings.
[[nodiscard]] std::string render_csv(const Table& table);

// Single JSON object {meta: {config, seed, version}, columns, rows}; finite
// numbers stay JSON numbers, infinities render as the strings "inf"/"-inf".
// config_echo must be a JSON document (the accepted manifest) or empty.
[[nodiscard]] std::string render_json(const Table& table, const std::string& config_echo,
                                      std::uint64_t seed, const std::string& version);

// Writes to the path, or to stdout when path is "-".
void write_output(const std::string& path, const std::string& content);

}  // namespace levymd
