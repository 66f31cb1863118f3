#pragma once

#include <algorithm>
#include <cstdint>
#include <charconv>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "json.hpp"
#include "text.hpp"

namespace mvp {

using Cell = std::variant<std::int64_t, std::string>;

/// A named table of integer/string cells plus free-form generation metadata.
/// Metadata is carried by the JSON and pretty renderers only; CSV holds the
/// cells.
struct ReportTable {
    std::string name;
    std::vector<std::string> headers;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, std::string>> metadata;

    void add_row(std::vector<Cell> row) {
        if (row.size() != headers.size())
            throw InvalidSize("row of arity " + std::to_string(row.size()) + " in table '" + name + "' with " +
                              std::to_string(headers.size()) + " columns");
        rows.push_back(std::move(row));
    }

    /// Cell at (row, header); throws if the column does not exist.
    const Cell& at(std::size_t row, std::string_view header) const {
        const auto it = std::find(headers.begin(), headers.end(), header);
        if (it == headers.end()) throw IndexOutOfRange("no column '" + std::string(header) + "' in table '" + name + "'");
        return rows.at(row).at(static_cast<std::size_t>(it - headers.begin()));
    }

    std::int64_t int_at(std::size_t row, std::string_view header) const { return std::get<std::int64_t>(at(row, header)); }
};

inline std::string cell_text(const Cell& c) {
    if (const auto* v = std::get_if<std::int64_t>(&c)) return std::to_string(*v);
    return std::get<std::string>(c);
}

// ++ CSV ++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++
// Header row first; integers bare, strings always double-quoted with ""
// escaping; LF line endings.

namespace detail {

inline std::string csv_quote(std::string_view s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

inline bool csv_needs_quotes(std::string_view s) {
    return s.empty() || s.find_first_of(",\"\n\r") != std::string_view::npos;
}

struct CsvField {
    std::string text;
    bool quoted;
};

inline std::vector<std::vector<CsvField>> split_csv(std::string_view s) {
    std::vector<std::vector<CsvField>> records;
    std::vector<CsvField> record;
    std::size_t pos = 0;
    if (s.empty()) return records;
    while (true) {
        CsvField field{"", false};
        if (pos < s.size() && s[pos] == '"') {
            field.quoted = true;
            ++pos;
            while (true) {
                if (pos >= s.size()) throw ParseError("unterminated quoted CSV field");
                if (s[pos] == '"') {
                    if (pos + 1 < s.size() && s[pos + 1] == '"') {
                        field.text += '"';
                        pos += 2;
                        continue;
                    }
                    ++pos;
                    break;
                }
                field.text += s[pos++];
            }
        } else {
            while (pos < s.size() && s[pos] != ',' && s[pos] != '\n') field.text += s[pos++];
            if (!field.text.empty() && field.text.back() == '\r') field.text.pop_back();
        }
        record.push_back(std::move(field));
        if (pos >= s.size()) {
            records.push_back(std::move(record));
            break;
        }
        if (s[pos] == ',') {
            ++pos;
            continue;
        }
        if (s[pos] != '\n') throw ParseError("unexpected character after quoted CSV field");
        records.push_back(std::move(record));
        record.clear();
        ++pos;
        if (pos >= s.size()) break;
    }
    return records;
}

}  // namespace detail

inline std::string to_csv(const ReportTable& t) {
    std::string out;
    for (std::size_t k = 0; k < t.headers.size(); ++k) {
        if (k) out += ',';
        out += detail::csv_needs_quotes(t.headers[k]) ? detail::csv_quote(t.headers[k]) : t.headers[k];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) out += ',';
            if (const auto* v = std::get_if<std::int64_t>(&row[k]))
                out += std::to_string(*v);
            else
                out += detail::csv_quote(std::get<std::string>(row[k]));
        }
        out += '\n';
    }
    return out;
}

inline ReportTable parse_csv(std::string_view csv, std::string name = {}) {
    const auto records = detail::split_csv(csv);
    if (records.empty()) throw ParseError("CSV without a header row");
    ReportTable t;
    t.name = std::move(name);
    for (const auto& f : records.front()) t.headers.push_back(f.text);
    for (std::size_t r = 1; r < records.size(); ++r) {
        std::vector<Cell> row;
        for (const auto& f : records[r]) {
            if (f.quoted) {
                row.emplace_back(f.text);
                continue;
            }
            std::int64_t v = 0;
            const char* end = f.text.data() + f.text.size();
            const auto [ptr, ec] = std::from_chars(f.text.data(), end, v);
            if (!f.text.empty() && ec == std::errc{} && ptr == end)
                row.emplace_back(v);
            else
                row.emplace_back(f.text);
        }
        t.add_row(std::move(row));
    }
    return t;
}

// ++ JSON +++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

inline nlohmann::ordered_json to_json(const ReportTable& t) {
    nlohmann::ordered_json j;
    j["name"] = t.name;
    j["headers"] = t.headers;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        auto r = nlohmann::ordered_json::array();
        for (const auto& c : row) {
            if (const auto* v = std::get_if<std::int64_t>(&c))
                r.push_back(*v);
            else
                r.push_back(std::get<std::string>(c));
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    auto meta = nlohmann::ordered_json::object();
    for (const auto& [k, v] : t.metadata) meta[k] = v;
    j["metadata"] = std::move(meta);
    return j;
}

// ++ Pretty +++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

inline std::string to_pretty(const ReportTable& t) {
    std::vector<std::size_t> width(t.headers.size());
    for (std::size_t k = 0; k < t.headers.size(); ++k) width[k] = t.headers[k].size();
    for (const auto& row : t.rows)
        for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], cell_text(row[k]).size());

    auto line = [&](const std::vector<std::string>& cells) {
        std::string out;
        for (std::size_t k = 0; k < cells.size(); ++k) {
            if (k) out += " | ";
            out += std::string(width[k] - cells[k].size(), ' ') + cells[k];
        }
        return out + '\n';
    };

    std::string out = t.name.empty() ? "" : t.name + "\n";
    out += line(t.headers);
    std::string rule;
    for (std::size_t k = 0; k < width.size(); ++k) rule += (k ? "-+-" : "") + std::string(width[k], '-');
    out += rule + '\n';
    for (const auto& row : t.rows) {
        std::vector<std::string> cells;
        for (const auto& c : row) cells.push_back(cell_text(c));
        out += line(cells);
    }
    for (const auto& [k, v] : t.metadata) out += "# " + k + ": " + v + '\n';
    return out;
}

}  // namespace mvp
