#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace zeno {

/// Numeric table written as comma-separated text with LF line endings.
/// Integers print exactly; doubles with 12 significant digits.
class CsvTable {
public:
    using Cell = std::variant<std::int64_t, double>;

    explicit CsvTable(std::vector<std::string> header);

    const std::vector<std::string>& header() const { return header_; }
    const std::vector<std::vector<Cell>>& rows() const { return rows_; }

    void add_row(std::vector<Cell> row);

    void write(std::ostream& out) const;
    std::string str() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<Cell>> rows_;
};

std::string format_cell(const CsvTable::Cell& cell);

/// Writes through a sibling temporary file and renames it into place, so a
/// failed write never leaves a partial file at `path`.
void write_csv_file(const CsvTable& table, const std::filesystem::path& path);

}  // namespace zeno
