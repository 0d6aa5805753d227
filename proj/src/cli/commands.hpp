#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cli/output.hpp"
#include "cqed/model.hpp"
#include "cqed/parity.hpp"

namespace cqed::cli {

// "all" or a comma-free list of labels; validated against the device size.
std::vector<LogicalState> parse_states(const std::vector<std::string>& labels, int num_qubits);

std::vector<Table> spectrum_tables(const DeviceSpec& device);

struct SweepOptions {
    std::vector<std::string> states{"all"};
    double delta_c_mhz = 0.0;
    double start = 25.0;  // dB, or MHz with linear
    double stop = 45.0;
    int points = 400;
    bool linear = false;
    std::string direction = "both";  // up, down, both
    std::string name = "sweep";
};
std::vector<Table> sweep_tables(const DeviceSpec& device, const SweepOptions& opts, unsigned threads);

Table bifurcation_table(const DeviceSpec& device, double delta_c_mhz);

struct BorderGrid {
    double start_mhz = -50.0;
    double stop_mhz = 10.0;
    int points = 601;
    std::string name = "borders";
};
// Long-format epsilon_2(delta_c) per state, plus the existence borders.
std::vector<Table> borders_tables(const DeviceSpec& device, const BorderGrid& grid, unsigned threads);

std::vector<Table> parity_tables(const ParityPlan& plan, const PlanCheck* check);
std::string parity_text(const ParityPlan& plan, const PlanCheck* check);

struct DecoherenceOptions {
    std::size_t qubit = 0;  // zero-based
    double n_min = 1e-2;    // first positive sample; n = 0 is always included
    double n_max = 1e8;
    int points = 101;
    std::vector<double> delta_c_mhz{-20.0};
    std::vector<double> epsilon_mhz{10.0};
    std::vector<double> kappa_mhz{1.0, 2.0, 3.0, 4.0, 5.0};
};
std::vector<Table> decoherence_tables(const DeviceSpec& device, const DecoherenceOptions& opts);

struct OracleCheckOptions {
    std::size_t qubit = 0;
    int cutoff = 30;
    double delta_c_mhz = 0.0;
    std::vector<double> epsilon_mhz{2.0, 5.0, 8.0, 11.0, 14.0};
};
// One row per check with value, tolerance and verdict; `all_pass` summarises.
Table oracle_table(const DeviceSpec& device, const OracleCheckOptions& opts, unsigned threads, bool& all_pass);

}  // namespace cqed::cli
