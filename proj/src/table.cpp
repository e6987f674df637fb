#include "conet/table.hpp"

#include "conet/error.hpp"
#include "conet/io_util.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <utility>

namespace conet {

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

namespace {

std::string csv_escape(const std::string& s) {
    bool need_quotes = false;
    for (char c : s) {
        if (c == ',' || c == '"' || c == '\n' || c == '\r') {
            need_quotes = true;
            break;
        }
    }
    if (!need_quotes) return s;

    std::string out;
    out.reserve(s.size() + 2);
    out.push_back('"');
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string tsv_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '\t': out += "\\t"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

} // namespace

std::string format_cell(const Cell& cell, TableFormat format) {
    std::string raw;
    if (const auto* i = std::get_if<std::int64_t>(&cell)) {
        raw = std::to_string(*i);
    } else if (const auto* d = std::get_if<double>(&cell)) {
        raw = format_double(*d);
    } else {
        raw = std::get<std::string>(cell);
    }
    return format == TableFormat::csv ? csv_escape(raw) : tsv_escape(raw);
}

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void Table::add_row(std::vector<Cell> cells) {
    if (cells.size() != columns_.size()) {
        throw Error("table row has " + std::to_string(cells.size()) +
                    " cells, expected " + std::to_string(columns_.size()));
    }
    lines_.push_back(Line{false, std::move(cells), {}});
    ++n_rows_;
}

void Table::add_comment(std::string text) {
    lines_.push_back(Line{true, {}, std::move(text)});
}

void Table::write(std::ostream& out, TableFormat format) const {
    const char sep = format == TableFormat::csv ? ',' : '\t';
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (i) out << sep;
        out << format_cell(Cell{columns_[i]}, format);
    }
    out << '\n';
    for (const auto& line : lines_) {
        if (line.is_comment) {
            out << "# " << line.comment << '\n';
            continue;
        }
        for (std::size_t i = 0; i < line.cells.size(); ++i) {
            if (i) out << sep;
            out << format_cell(line.cells[i], format);
        }
        out << '\n';
    }
}

void write_table(const Table& table, const std::filesystem::path& path,
                 TableFormat format) {
    atomic_write(path, [&](std::ostream& out) { table.write(out, format); });
}

} // namespace conet
