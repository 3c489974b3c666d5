#include "dcf/output.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <ostream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

namespace dcf {

void OutputTable::add_column(std::string name, std::vector<double> values) {
    if (!columns.empty() && values.size() != columns.front().size())
        throw std::invalid_argument("output table: column '" + name + "' has mismatched length");
    column_names.push_back(std::move(name));
    columns.push_back(std::move(values));
}

std::size_t OutputTable::rows() const { return columns.empty() ? 0 : columns.front().size(); }

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_csv(const OutputTable& table, std::ostream& out) {
    for (const auto& [key, value] : table.meta) out << "# " << key << ": " << value << "\n";
    for (std::size_t c = 0; c < table.column_names.size(); ++c)
        out << (c ? "," : "") << table.column_names[c];
    out << "\n";
    for (std::size_t r = 0; r < table.rows(); ++r) {
        for (std::size_t c = 0; c < table.columns.size(); ++c)
            out << (c ? "," : "") << format_double(table.columns[c][r]);
        out << "\n";
    }
}

void write_json(const OutputTable& table, std::ostream& out) {
    nlohmann::ordered_json doc;
    auto& meta = doc["meta"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : table.meta) meta[key] = value;
    auto& columns = doc["columns"] = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        nlohmann::ordered_json col;
        col["name"] = table.column_names[c];
        col["values"] = table.columns[c];
        columns.push_back(std::move(col));
    }
    out << doc.dump(2) << "\n";
}

void write_table(const OutputTable& table, const std::string& path, OutputFormat format) {
    const auto emit = [&](std::ostream& out) {
        if (format == OutputFormat::csv)
            write_csv(table, out);
        else
            write_json(table, out);
        out.flush();
        if (!out) throw std::runtime_error("output: write failed" +
                                           (path.empty() ? std::string() : " for " + path));
    };
    if (path.empty()) {
        emit(std::cout);
        return;
    }
    std::ofstream file(path);
    if (!file) throw std::runtime_error("output: cannot open " + path);
    emit(file);
}

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw std::invalid_argument("output format must be csv or json, got '" + name + "'");
}

}  // namespace dcf
