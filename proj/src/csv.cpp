#include "firefleet/csv.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace firefleet {

void CsvTable::add_row(std::vector<std::string> row) {
    if (row.size() != header_.size())
        throw std::invalid_argument("csv: row width does not match the header");
    rows_.push_back(std::move(row));
}

std::string CsvTable::to_csv() const {
    std::string out;
    auto append_line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    append_line(header_);
    for (const auto& row : rows_) append_line(row);
    return out;
}

std::string CsvTable::to_json() const {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const auto& row : rows_) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < header_.size(); ++i) obj[header_[i]] = row[i];
        array.push_back(std::move(obj));
    }
    return array.dump(2) + "\n";
}

void CsvTable::write(const std::string& path, bool as_json) const {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("csv: cannot open " + path + " for writing");
    file << (as_json ? to_json() : to_csv());
    if (!file) throw std::runtime_error("csv: write to " + path + " failed");
}

}  // namespace firefleet
