#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dunklkg/oracle.hpp"

namespace dunklkg::tables {

// Nearest double that survives a 15-significant-digit text round trip.
// Tables store quantized values so CSV and JSON emissions carry identical
// numbers and re-parsing reproduces the in-memory table exactly.
double quantize(double v);

// 15 significant digits, '.' decimal separator regardless of locale.
std::string format_double(double v);

struct Table {
    // Emitted as "# key=value" comment lines ahead of the CSV header and as
    // a string-valued "meta" object in JSON.
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    // Quantizes each cell; throws std::invalid_argument on column mismatch.
    void add_row(std::vector<double> row);

    std::string to_csv() const;
    std::string to_json() const;
};

bool operator==(const Table& a, const Table& b);

// Inverse of Table::to_json (accepts any valid JSON spelling of the schema).
Table parse_json(const std::string& text);

// Serializes verification outcomes: {"all_pass": ..., "reports": [{quantity,
// closed_form, oracle, errors{abs,rel}, tolerance, history, pass, detail}]}.
std::string verification_report_json(const std::vector<oracle::VerificationReport>& reports);

// Writes exactly `contents`; throws std::runtime_error if the path is not writable.
void write_file(const std::string& path, const std::string& contents);

} // namespace dunklkg::tables
