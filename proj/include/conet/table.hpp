// Tabular output: the CSV/TSV files behind every report.
//
// Doubles are rendered with std::to_chars shortest round-trip form, so any
// value can be re-read exactly from the file (never fewer digits than the
// value needs, never noise digits). Integers are rendered in plain decimal.

#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace conet {

enum class TableFormat { csv, tsv };

using Cell = std::variant<std::int64_t, double, std::string>;

std::string format_cell(const Cell& cell, TableFormat format);

class Table {
public:
    explicit Table(std::vector<std::string> columns);

    void add_row(std::vector<Cell> cells);

    // Free-form comment line, written with a leading "# " where it was
    // inserted (used for summary blocks under a data table).
    void add_comment(std::string text);

    const std::vector<std::string>& columns() const { return columns_; }
    std::size_t row_count() const { return n_rows_; }

    void write(std::ostream& out, TableFormat format) const;

private:
    struct Line {
        bool is_comment;
        std::vector<Cell> cells;
        std::string comment;
    };

    std::vector<std::string> columns_;
    std::vector<Line> lines_;
    std::size_t n_rows_ = 0;
};

// Writes header + rows to `path` atomically (temp file + rename).
void write_table(const Table& table, const std::filesystem::path& path,
                 TableFormat format);

// Shortest round-trip decimal rendering of a double ("0.5", not "0.500000").
std::string format_double(double value);

} // namespace conet
