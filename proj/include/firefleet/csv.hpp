#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

namespace firefleet {

/** Floats rendered with 6 significant digits, matching all CSV output. */
inline std::string format_number(double value) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

inline std::string format_number(std::int64_t value) { return std::to_string(value); }
inline std::string format_number(int value) { return std::to_string(value); }
inline std::string format_number(std::uint64_t value) { return std::to_string(value); }
inline std::string format_number(bool value) { return value ? "1" : "0"; }

/** Comma-separated table with a header row and LF line endings. Cells are
    preformatted strings; writing is deterministic by construction. */
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(std::vector<std::string> row);
    const std::vector<std::string>& header() const { return header_; }
    const std::vector<std::vector<std::string>>& rows() const { return rows_; }

    std::string to_csv() const;
    /** Array of objects keyed by the header, values as the cell strings. */
    std::string to_json() const;
    void write(const std::string& path, bool as_json) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace firefleet
