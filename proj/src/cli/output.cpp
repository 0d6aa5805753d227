#include "cli/output.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "cqed/errors.hpp"

namespace cqed::cli {

void Table::add(std::vector<Cell> row) {
    if (row.size() != columns.size())
        throw std::logic_error("table " + name + ": row has " + std::to_string(row.size()) + " cells, expected " +
                               std::to_string(columns.size()));
    rows.push_back(std::move(row));
}

void RunManifest::set(const std::string& key, const std::string& value) {
    for (auto& [k, v] : parameters)
        if (k == key) {
            v = value;
            return;
        }
    parameters.emplace_back(key, value);
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";  // folds -0
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

namespace {

struct CellText {
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& s) const { return s; }
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

nlohmann::ordered_json cell_json(const Cell& c) {
    return std::visit(
        [](const auto& v) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                if (!std::isfinite(v)) return nullptr;
            }
            return v;
        },
        c);
}

}  // namespace

std::string format_cell(const Cell& c) { return std::visit(CellText{}, c); }

void write_csv(std::ostream& os, const Table& t, const std::optional<std::string>& manifest_ref) {
    if (manifest_ref) os << "# manifest: " << *manifest_ref << '\n';
    os << "# units:";
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : " ") << t.columns[i].unit;
    os << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_field(t.columns[i].name);
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(format_cell(row[i]));
        os << '\n';
    }
}

nlohmann::ordered_json to_json(const Table& t) {
    nlohmann::ordered_json cols = nlohmann::ordered_json::array();
    for (const auto& c : t.columns) cols.push_back({{"name", c.name}, {"unit", c.unit}});
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : t.rows) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (const auto& c : r) row.push_back(cell_json(c));
        rows.push_back(std::move(row));
    }
    return {{"name", t.name}, {"columns", std::move(cols)}, {"rows", std::move(rows)}};
}

nlohmann::ordered_json to_json(const RunManifest& m, bool with_timestamp) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : m.parameters) params[k] = v;
    nlohmann::ordered_json j = {{"subcommand", m.subcommand},
                                {"config", m.config_path},
                                {"parameters", std::move(params)},
                                {"outputs", m.outputs},
                                {"version", m.version}};
    if (with_timestamp) j["timestamp"] = m.timestamp;
    return j;
}

std::string current_timestamp() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    if (const char* env = std::getenv("SOURCE_DATE_EPOCH")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0') t = static_cast<std::time_t>(v);
    }
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ValidationError("cannot open " + path.string() + " for writing");
    f << text;
    if (!f) throw ValidationError("failed writing " + path.string());
}

}  // namespace

void emit(const std::vector<Table>& tables, RunManifest manifest, const OutputOptions& opts, std::ostream& out) {
    const char* ext = opts.json ? ".json" : ".csv";
    if (!opts.out_dir) {
        for (const auto& t : tables) manifest.outputs.push_back("stdout:" + t.name);
        if (opts.json) {
            nlohmann::ordered_json doc = {{"manifest", to_json(manifest, false)}, {"tables", nlohmann::ordered_json::array()}};
            for (const auto& t : tables) doc["tables"].push_back(to_json(t));
            out << doc.dump(2) << '\n';
            return;
        }
        for (std::size_t i = 0; i < tables.size(); ++i) {
            if (i) out << '\n';
            out << "# table: " << tables[i].name << '\n';
            write_csv(out, tables[i]);
        }
        return;
    }

    namespace fs = std::filesystem;
    const fs::path dir(*opts.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw ValidationError("cannot create output directory " + dir.string());
    for (const auto& t : tables) manifest.outputs.push_back(t.name + ext);
    manifest.timestamp = current_timestamp();
    for (const auto& t : tables) {
        std::ostringstream os;
        if (opts.json) {
            nlohmann::ordered_json doc = to_json(t);
            doc["manifest"] = "manifest.json";
            os << doc.dump(2) << '\n';
        } else {
            write_csv(os, t, "manifest.json");
        }
        write_file(dir / (t.name + ext), os.str());
    }
    write_file(dir / "manifest.json", to_json(manifest, true).dump(2) + "\n");
    out << "wrote " << tables.size() << " file(s) to " << dir.string() << '\n';
}

}  // namespace cqed::cli
