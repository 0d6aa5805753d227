// Reader and writer for the device config: a small TOML subset with numeric
// values, one [cavity] table, repeated [[qubit]] tables and top-level keys.
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <deque>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "cqed/model.hpp"

namespace cqed {

namespace {

std::string_view trim(std::string_view s) {
    const char* ws = " \t\r";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

bool is_key(std::string_view k) {
    if (k.empty()) return false;
    for (char c : k)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

struct Section {
    std::string name;
    int line = 0;
    std::map<std::string, std::pair<double, int>> values;  // key -> (value, line)
};

double parse_number(std::string_view text, int line, const std::string& key) {
    double v = 0.0;
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
        throw ParseError(line, "value of '" + key + "' is not a number: '" + std::string(text) + "'");
    return v;
}

const std::set<std::string> kTopKeys = {"levels"};
const std::set<std::string> kCavityKeys = {"omega_c_ghz", "kappa_mhz"};
const std::set<std::string> kQubitKeys = {"omega10_ghz", "omega21_ghz", "g1_ghz", "gamma1_mhz",
                                          "gamma_phi_mhz"};

double required(const Section& s, const std::string& key) {
    auto it = s.values.find(key);
    if (it == s.values.end())
        throw ValidationError("missing required key '" + s.name + "." + key + "' (section at line " +
                              std::to_string(s.line) + ")");
    return it->second.first;
}

double optional_value(const Section& s, const std::string& key, double fallback) {
    auto it = s.values.find(key);
    return it == s.values.end() ? fallback : it->second.first;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

DeviceSpec load_device(std::string_view text) {
    Section top{"", 1, {}};
    std::optional<Section> cavity;
    std::deque<Section> qubits;  // stable addresses for `current`
    Section* current = &top;
    const std::set<std::string>* allowed = &kTopKeys;

    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line == "[cavity]") {
                if (cavity) throw ParseError(line_no, "duplicate [cavity] table");
                cavity = Section{"cavity", line_no, {}};
                current = &*cavity;
                allowed = &kCavityKeys;
            } else if (line == "[[qubit]]") {
                qubits.push_back(Section{"qubit[" + std::to_string(qubits.size() + 1) + "]", line_no, {}});
                current = &qubits.back();
                allowed = &kQubitKeys;
            } else {
                throw ParseError(line_no, "unknown or malformed table header '" + std::string(line) + "'");
            }
            continue;
        }

        auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
        std::string key(trim(line.substr(0, eq)));
        std::string_view value = trim(line.substr(eq + 1));
        if (!is_key(key)) throw ParseError(line_no, "invalid key '" + key + "'");
        if (!allowed->count(key)) {
            std::string where = current->name.empty() ? "top level" : "[" + current->name + "]";
            throw ParseError(line_no, "unknown key '" + key + "' in " + where);
        }
        if (current->values.count(key)) throw ParseError(line_no, "duplicate key '" + key + "'");
        current->values[key] = {parse_number(value, line_no, key), line_no};
    }

    DeviceSpec device;
    if (auto it = top.values.find("levels"); it != top.values.end()) {
        double v = it->second.first;
        if (v != std::floor(v)) throw ParseError(it->second.second, "levels must be an integer");
        if (v < 0 || v > 1000) throw ValidationError("levels out of range");
        device.levels = static_cast<int>(v);
    }
    if (!cavity) throw ValidationError("missing [cavity] table");
    device.cavity.omega_c_ghz = required(*cavity, "omega_c_ghz");
    device.cavity.kappa_mhz = optional_value(*cavity, "kappa_mhz", 1.0);
    for (const Section& s : qubits) {
        QubitSpec q;
        q.omega10_ghz = required(s, "omega10_ghz");
        q.omega21_ghz = required(s, "omega21_ghz");
        q.g1_ghz = required(s, "g1_ghz");
        q.gamma1_mhz = optional_value(s, "gamma1_mhz", 0.0);
        q.gamma_phi_mhz = optional_value(s, "gamma_phi_mhz", 0.0);
        device.qubits.push_back(q);
    }
    validate(device);
    return device;
}

DeviceSpec load_device_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_device(buf.str());
}

std::string serialize(const DeviceSpec& device) {
    std::ostringstream out;
    out << "levels = " << device.levels << "\n\n[cavity]\n";
    out << "omega_c_ghz = " << format_double(device.cavity.omega_c_ghz) << "\n";
    out << "kappa_mhz = " << format_double(device.cavity.kappa_mhz) << "\n";
    for (const QubitSpec& q : device.qubits) {
        out << "\n[[qubit]]\n";
        out << "omega10_ghz = " << format_double(q.omega10_ghz) << "\n";
        out << "omega21_ghz = " << format_double(q.omega21_ghz) << "\n";
        out << "g1_ghz = " << format_double(q.g1_ghz) << "\n";
        out << "gamma1_mhz = " << format_double(q.gamma1_mhz) << "\n";
        out << "gamma_phi_mhz = " << format_double(q.gamma_phi_mhz) << "\n";
    }
    return out.str();
}

}  // namespace cqed
