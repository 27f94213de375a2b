#include "projineq/cli/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "projineq/cli/error.hpp"

namespace projineq::cli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

bool is_blank(const std::vector<std::string> &record) {
    return record.size() == 1 && trim(record.front()).empty();
}

} // namespace

CsvTable parse_csv(std::string_view text) {
    if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

    std::vector<std::vector<std::string>> records;
    std::vector<std::size_t> record_lines;
    std::vector<std::string> record;
    std::string field;
    bool in_quotes = false;
    bool field_was_quoted = false;
    std::size_t line = 1;
    std::size_t record_start = 1;

    auto end_field = [&] {
        record.push_back(field_was_quoted ? field : std::string(trim(field)));
        field.clear();
        field_was_quoted = false;
    };
    auto end_record = [&] {
        end_field();
        if (!is_blank(record)) {
            records.push_back(std::move(record));
            record_lines.push_back(record_start);
        }
        record.clear();
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
        case '"':
            if (!trim(field).empty()) {
                throw InputError(ExitCode::MalformedInput,
                                 "csv: stray quote inside unquoted field on line " + std::to_string(line));
            }
            field.clear();
            in_quotes = true;
            field_was_quoted = true;
            break;
        case ',':
            end_field();
            break;
        case '\r':
            if (i + 1 < text.size() && text[i + 1] == '\n') break;
            [[fallthrough]];
        case '\n':
            end_record();
            ++line;
            record_start = line;
            break;
        default:
            if (field_was_quoted && c != ' ' && c != '\t') {
                throw InputError(ExitCode::MalformedInput,
                                 "csv: text after closing quote on line " + std::to_string(line));
            }
            field.push_back(c);
        }
    }
    if (in_quotes) throw InputError(ExitCode::MalformedInput, "csv: unterminated quoted field");
    if (!field.empty() || field_was_quoted || !record.empty()) end_record();

    if (records.empty()) throw InputError(ExitCode::MalformedInput, "csv: missing header row");

    CsvTable table;
    table.header = std::move(records.front());
    for (std::size_t r = 1; r < records.size(); ++r) {
        if (records[r].size() != table.header.size()) {
            throw InputError(ExitCode::MalformedInput,
                             "csv: line " + std::to_string(record_lines[r]) + " has " +
                                 std::to_string(records[r].size()) + " fields, header has " +
                                 std::to_string(table.header.size()));
        }
        table.rows.push_back(std::move(records[r]));
    }
    return table;
}

std::size_t CsvTable::column_index(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    throw InputError(ExitCode::MalformedInput, "csv: missing column '" + std::string(name) + "'");
}

std::vector<double> CsvTable::numeric_column(std::string_view name) const {
    const std::size_t col = column_index(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::string_view cell = trim(rows[r][col]);
        double v = 0.0;
        const char *first = cell.data();
        const char *last = cell.data() + cell.size();
        if (!cell.empty() && *first == '+') ++first;
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (cell.empty() || ec != std::errc() || ptr != last || !std::isfinite(v)) {
            throw InputError(ExitCode::MalformedInput, "csv: row " + std::to_string(r + 1) + ", column '" +
                                                           std::string(name) + "': not a finite number: '" +
                                                           std::string(cell) + "'");
        }
        out.push_back(v);
    }
    return out;
}

std::string format_double(double v) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

} // namespace projineq::cli
