#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace cqed::cli {

using Cell = std::variant<double, long long, bool, std::string>;

struct Column {
    std::string name;
    std::string unit;  // "1" for dimensionless, "-" for labels
};

struct Table {
    std::string name;
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row);
};

// Provenance of one invocation. The timestamp only goes into the manifest file,
// so data files depend on the inputs alone.
struct RunManifest {
    std::string subcommand;
    std::string config_path;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<std::string> outputs;
    std::string version;
    std::string timestamp;

    void set(const std::string& key, const std::string& value);
};

// Shortest round-trip decimal form; non-finite values as nan/inf.
std::string format_number(double v);
std::string format_cell(const Cell& c);

// "# units:" comment, header row, data rows; LF line endings.
void write_csv(std::ostream& os, const Table& t, const std::optional<std::string>& manifest_ref = std::nullopt);

nlohmann::ordered_json to_json(const Table& t);
nlohmann::ordered_json to_json(const RunManifest& m, bool with_timestamp);

// UTC ISO 8601; SOURCE_DATE_EPOCH overrides the clock.
std::string current_timestamp();

struct OutputOptions {
    bool json = false;
    std::optional<std::string> out_dir;
};

// stdout: tables one after another (CSV) or a single JSON document.
// out_dir: <name>.csv or <name>.json per table plus manifest.json.
void emit(const std::vector<Table>& tables, RunManifest manifest, const OutputOptions& opts, std::ostream& out);

}  // namespace cqed::cli
