#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace weakpath::io {

/// Absent cells are undefined values (singular rows, vanishing scale
/// factors). They print as empty CSV cells and JSON null.
using Cell = std::optional<double>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    /// Throws DomainError if the row width differs from the header.
    void add_row(std::vector<Cell> row);
    std::size_t column_index(const std::string& name) const;
};

enum class Format { csv, json };

/// 12 significant digits, '.' decimal separator, negative zero printed as 0.
std::string format_number(double v);

/// The double a reader of the CSV text recovers for v.
double printed_value(double v);

void write_csv(const Table& table, std::ostream& os);

/// {"columns": [...], "rows": [{"col": value-or-null, ...}, ...]} with the
/// same printed values as the CSV.
void write_json(const Table& table, std::ostream& os);

Table read_json(std::istream& is);

/// Writes to the file, or to stdout when path is empty. I/O failures throw
/// std::runtime_error naming the path.
void write_table(const Table& table, Format format, const std::optional<std::filesystem::path>& path);

}  // namespace weakpath::io
