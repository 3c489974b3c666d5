#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace dcf {

enum class OutputFormat { csv, json };

// Tabular sweep result: ordered metadata (echoed config, units note,
// truncation orders) plus equal-length numeric columns.
struct OutputTable {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> column_names;
    std::vector<std::vector<double>> columns;  // column-major

    void add_column(std::string name, std::vector<double> values);
    std::size_t rows() const;
};

// Shortest decimal string that round-trips to the same double ("1.5", not
// "1.5000000000000000"); byte-stable across runs.
std::string format_double(double v);

// '#'-prefixed "key: value" metadata lines, one header row, comma-separated
// rows with format_double cells.
void write_csv(const OutputTable& table, std::ostream& out);

// {"meta": {...}, "columns": [{"name": ..., "values": [...]}]} with insertion
// order preserved.
void write_json(const OutputTable& table, std::ostream& out);

// Writes to the path, or to stdout when the path is empty.  Throws
// std::runtime_error when the file cannot be created or written.
void write_table(const OutputTable& table, const std::string& path, OutputFormat format);

// "csv" or "json"; anything else throws std::invalid_argument.
OutputFormat parse_format(const std::string& name);

}  // namespace dcf
