#include "weakpath/table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <json.hpp>

#include "weakpath/errors.hpp"

namespace weakpath::io {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw DomainError("row width does not match header");
    rows.push_back(std::move(row));
}

std::size_t Table::column_index(const std::string& name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) throw DomainError("no column named " + name);
    return static_cast<std::size_t>(it - columns.begin());
}

std::string format_number(double v) {
    if (!std::isfinite(v)) throw DomainError("non-finite value in dataset");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    std::string s{buf};
    if (s == "-0") s = "0";
    return s;
}

double printed_value(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

void write_csv(const Table& table, std::ostream& os) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) os << ',';
        os << table.columns[c];
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << ',';
            if (row[c]) os << format_number(*row[c]);
        }
        os << '\n';
    }
}

void write_json(const Table& table, std::ostream& os) {
    nlohmann::ordered_json doc;
    doc["columns"] = table.columns;
    auto& rows = doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c) {
            obj[table.columns[c]] = row[c] ? nlohmann::ordered_json(printed_value(*row[c]))
                                           : nlohmann::ordered_json(nullptr);
        }
        rows.push_back(std::move(obj));
    }
    os << doc.dump(1) << '\n';
}

Table read_json(std::istream& is) {
    const auto doc = nlohmann::ordered_json::parse(is);
    Table table;
    table.columns = doc.at("columns").get<std::vector<std::string>>();
    for (const auto& obj : doc.at("rows")) {
        std::vector<Cell> row;
        row.reserve(table.columns.size());
        for (const auto& name : table.columns) {
            const auto& v = obj.at(name);
            row.push_back(v.is_null() ? Cell{} : Cell{v.get<double>()});
        }
        table.add_row(std::move(row));
    }
    return table;
}

void write_table(const Table& table, Format format, const std::optional<std::filesystem::path>& path) {
    auto emit = [&](std::ostream& os) {
        if (format == Format::csv) {
            write_csv(table, os);
        } else {
            write_json(table, os);
        }
    };
    if (!path) {
        emit(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream file(*path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open output file " + path->string());
    emit(file);
    file.flush();
    if (!file) throw std::runtime_error("failed writing output file " + path->string());
}

}  // namespace weakpath::io
