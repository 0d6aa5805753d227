#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "cqed/errors.hpp"

namespace cqed {

// Unit conventions: all frequencies are linear (no 2*pi). Device frequencies
// are carried in GHz, rates, drive strengths and shifts in MHz.
inline constexpr double kMHzPerGHz = 1e3;
inline constexpr int kMaxLevels = 12;

struct QubitSpec {
    double omega10_ghz = 0.0;
    double omega21_ghz = 0.0;
    double g1_ghz = 0.0;
    double gamma1_mhz = 0.0;
    double gamma_phi_mhz = 0.0;

    double anharmonicity_ghz() const { return omega21_ghz - omega10_ghz; }
};

struct CavitySpec {
    double omega_c_ghz = 0.0;
    double kappa_mhz = 1.0;
};

struct DeviceSpec {
    CavitySpec cavity;
    std::vector<QubitSpec> qubits;
    int levels = 3;

    int num_qubits() const { return static_cast<int>(qubits.size()); }
};

// Computational basis label. bits[0] is qubit 1, so "10" has qubit 1 excited.
struct LogicalState {
    std::vector<int> bits;

    static LogicalState parse(std::string_view label);
    std::string label() const;
    int excitations() const;
    bool odd() const { return excitations() % 2 == 1; }

    friend bool operator==(const LogicalState&, const LogicalState&) = default;
    friend auto operator<=>(const LogicalState&, const LogicalState&) = default;
};

// delta_c = omega_c - omega_d.
struct DriveSpec {
    double epsilon_mhz = 0.0;
    double delta_c_mhz = 0.0;
};

// Per-qubit expectation values for a logical state: sigma_z(i-1) = <sigma_{z,i}>
// for transitions i = 1..M-1 and occupation(k) = <Pi_k> for levels k = 0..M-1.
struct QubitPopulation {
    Eigen::VectorXd sigma_z;
    Eigen::VectorXd occupation;
};

void validate(const DeviceSpec& device);
void validate(const DriveSpec& drive);

// Rate hierarchy gamma << kappa << g^2/|Delta| << g << omega_c with a << b
// meaning b >= factor * a. Returns one message per violated link.
std::vector<std::string> hierarchy_warnings(const DeviceSpec& device, double factor = 5.0);

// g_i = sqrt(i) g1 for i = 1..M-1.
Eigen::VectorXd coupling_ladder(double g1, int levels);

// omega_{i,i-1} for i = 1..M-1, constant anharmonicity above omega21.
Eigen::VectorXd transition_frequencies(const QubitSpec& qubit, int levels);

std::vector<QubitPopulation> logical_sigma_z(const LogicalState& state, int levels);

// All 2^N states in label order ("00", "01", "10", "11", ...).
std::vector<LogicalState> all_states(int num_qubits);

DeviceSpec load_device(std::string_view config_text);
DeviceSpec load_device_file(const std::string& path);
std::string serialize(const DeviceSpec& device);

}  // namespace cqed
