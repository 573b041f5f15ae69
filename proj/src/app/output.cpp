/*
 * Copyright 2026 The cdwork Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "cdwork/errors.hpp"
#include "cdwork/version.hpp"

namespace cdwork::app {

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if (value == 0.0) return "0";
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, result.ptr);
}

nlohmann::json json_number(double value) {
    if (std::isfinite(value)) return value;
    return format_number(value);
}

Table::Table(std::string name, std::vector<std::string> columns) : name_(std::move(name)), columns_(std::move(columns)) {}

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size()) fail(ErrorCode::invalid_argument, "table '" + name_ + "': row width mismatch");
    rows_.push_back(std::move(row));
}

namespace {

std::string cell_text(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
    if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
    return std::get<std::string>(c);
}

nlohmann::json cell_json(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return json_number(*d);
    if (const auto* i = std::get_if<long long>(&c)) return *i;
    return std::get<std::string>(c);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::io, "cannot open " + path.string() + " for writing");
    out << text;
    if (!out) fail(ErrorCode::io, "failed writing " + path.string());
}

}  // namespace

nlohmann::json run_metadata(const RunConfig& config) {
    return {{"version", kVersion}, {"command", config.command}, {"config_hash", config_hash(config)},
            {"units", "hbar = 1, m = 1"}};
}

std::string Table::to_csv(const RunConfig& config) const {
    std::string s;
    s += "# cdwork " + std::string(kVersion) + "\n";
    s += "# command " + config.command + "\n";
    s += "# dataset " + name_ + "\n";
    s += "# config-hash fnv1a64:" + config_hash(config) + "\n";
    for (std::size_t i = 0; i < columns_.size(); ++i) s += (i ? "," : "") + columns_[i];
    s += "\n";
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + cell_text(row[i]);
        s += "\n";
    }
    return s;
}

nlohmann::json Table::to_json(const RunConfig& config) const {
    nlohmann::json j;
    j["metadata"] = run_metadata(config);
    j["metadata"]["dataset"] = name_;
    j["columns"] = columns_;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : rows_) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& c : row) r.push_back(cell_json(c));
        j["rows"].push_back(std::move(r));
    }
    return j;
}

std::filesystem::path write_table(const Table& table, const RunConfig& config) {
    const bool csv = config.format == "csv";
    const std::filesystem::path path = std::filesystem::path(config.out) / (table.name() + (csv ? ".csv" : ".json"));
    write_file(path, csv ? table.to_csv(config) : table.to_json(config).dump(2) + "\n");
    return path;
}

std::filesystem::path write_json(const std::string& name, const nlohmann::json& body, const RunConfig& config) {
    const std::filesystem::path path = std::filesystem::path(config.out) / (name + ".json");
    nlohmann::json doc = body;
    doc["metadata"] = run_metadata(config);
    doc["config"] = to_json(config);
    write_file(path, doc.dump(2) + "\n");
    return path;
}

}  // namespace cdwork::app
