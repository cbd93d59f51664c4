#include "dunklkg/tables.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

namespace dunklkg::tables {

std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 15);
    return std::string(buf, res.ptr);
}

double quantize(double v) {
    std::string s = format_double(v);
    double out = v;
    std::from_chars(s.data(), s.data() + s.size(), out);
    return out;
}

void Table::add_row(std::vector<double> row) {
    if (row.size() != columns.size())
        throw std::invalid_argument("row width does not match column count");
    for (double& v : row) v = quantize(v);
    rows.push_back(std::move(row));
}

std::string Table::to_csv() const {
    std::string out;
    for (const auto& [key, value] : meta) {
        out += "# ";
        out += key;
        out += '=';
        out += value;
        out += '\n';
    }
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ',';
        out += columns[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_double(row[i]);
        }
        out += '\n';
    }
    return out;
}

namespace {

// JSON has no literal for infinities or NaN; failing verification reports
// carry them, and they must survive serialization as null.
std::string json_number(double v) {
    return std::isfinite(v) ? format_double(v) : std::string("null");
}

// Column names and meta strings are plain ASCII; quote the minimum JSON needs.
std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string Table::to_json() const {
    std::string out = "{\n";
    if (!meta.empty()) {
        out += "  \"meta\": {";
        for (std::size_t i = 0; i < meta.size(); ++i) {
            if (i) out += ", ";
            out += json_string(meta[i].first);
            out += ": ";
            out += json_string(meta[i].second);
        }
        out += "},\n";
    }
    out += "  \"columns\": [";
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ", ";
        out += json_string(columns[i]);
    }
    out += "],\n  \"rows\": [";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out += i ? ",\n    [" : "\n    [";
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j) out += ", ";
            out += format_double(rows[i][j]);
        }
        out += ']';
    }
    out += rows.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return out;
}

bool operator==(const Table& a, const Table& b) {
    return a.meta == b.meta && a.columns == b.columns && a.rows == b.rows;
}

Table parse_json(const std::string& text) {
    // ordered_json keeps meta keys in document order so a round trip
    // reproduces the emitted table exactly.
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
    Table t;
    if (j.contains("meta"))
        for (const auto& [key, value] : j.at("meta").items())
            t.meta.emplace_back(key, value.get<std::string>());
    for (const auto& c : j.at("columns")) t.columns.push_back(c.get<std::string>());
    for (const auto& r : j.at("rows")) {
        std::vector<double> row;
        for (const auto& v : r) row.push_back(v.get<double>());
        if (row.size() != t.columns.size())
            throw std::invalid_argument("row width does not match column count");
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string verification_report_json(const std::vector<oracle::VerificationReport>& reports) {
    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.pass;
    std::string out = "{\n  \"all_pass\": ";
    out += all_pass ? "true" : "false";
    out += ",\n  \"reports\": [";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        out += i ? ",\n    {" : "\n    {";
        out += "\"quantity\": " + json_string(r.quantity);
        out += ", \"closed_form\": " + json_number(r.closed_form);
        out += ", \"oracle\": " + json_number(r.oracle);
        out += ", \"errors\": {\"abs\": " + json_number(r.abs_err);
        out += ", \"rel\": " + json_number(r.rel_err) + "}";
        out += ", \"tolerance\": " + json_number(r.tolerance);
        out += ", \"history\": [";
        for (std::size_t k = 0; k < r.history.size(); ++k) {
            if (k) out += ", ";
            out += json_number(r.history[k]);
        }
        out += "], \"pass\": ";
        out += r.pass ? "true" : "false";
        if (!r.detail.empty()) out += ", \"detail\": " + json_string(r.detail);
        out += '}';
    }
    out += reports.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return out;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!f) throw std::runtime_error("write failed: " + path);
}

} // namespace dunklkg::tables
