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

#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "run_config.hpp"

namespace cdwork::app {

using Cell = std::variant<double, long long, std::string>;

/// Shortest round-trip decimal form; "inf", "-inf" and "nan" for non-finite values.
std::string format_number(double value);

/// A column-oriented dataset written as CSV (with `#` metadata lines) or JSON.
class Table {
public:
    Table(std::string name, std::vector<std::string> columns);

    void add_row(std::vector<Cell> row);
    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] std::size_t rows() const noexcept { return rows_.size(); }

    [[nodiscard]] std::string to_csv(const RunConfig& config) const;
    [[nodiscard]] nlohmann::json to_json(const RunConfig& config) const;

private:
    std::string name_;
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
};

/// Metadata shared by every file of a run.
nlohmann::json run_metadata(const RunConfig& config);

/// Writes `<out>/<name>.csv` or `.json` depending on the configured format and
/// returns the path. Throws ErrorCode::io on failure.
std::filesystem::path write_table(const Table& table, const RunConfig& config);
std::filesystem::path write_json(const std::string& name, const nlohmann::json& body, const RunConfig& config);

/// JSON number or "inf"/"nan" string, so documents stay valid JSON.
nlohmann::json json_number(double value);

}  // namespace cdwork::app
