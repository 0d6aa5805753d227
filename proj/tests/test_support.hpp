#pragma once

#include <random>
#include <string>

#include "cqed/model.hpp"

namespace cqed::fixtures {

inline QubitSpec fig2_qubit1() { return {4.297, 4.071, 0.12, 0.02, 0.01}; }
inline QubitSpec fig2_qubit2() { return {4.094, 3.868, 0.12, 0.02, 0.01}; }

inline DeviceSpec fig2_device(double kappa_mhz = 1.0) {
    return {{5.005, kappa_mhz}, {fig2_qubit1(), fig2_qubit2()}, 3};
}

inline DeviceSpec single_qubit_device(int levels = 3, double kappa_mhz = 1.0) {
    return {{5.005, kappa_mhz}, {fig2_qubit1()}, levels};
}

inline DeviceSpec fig4_device(double kappa_mhz = 1.0) {
    DeviceSpec d{{5.005, kappa_mhz}, {}, 10};
    for (int j = 0; j < 4; ++j) d.qubits.push_back(fig2_qubit1());
    return d;
}

// Random device deep in the dispersive regime, cavity above the qubits.
inline DeviceSpec random_device(std::mt19937& rng, int num_qubits, int levels) {
    std::uniform_real_distribution<double> wc(5.0, 7.0), off(0.6, 1.5), anh(0.15, 0.3),
        g(0.02, 0.08), rate(0.0, 0.05);
    DeviceSpec d;
    d.cavity = {wc(rng), 1.0};
    d.levels = levels;
    for (int j = 0; j < num_qubits; ++j) {
        double w10 = d.cavity.omega_c_ghz - off(rng);
        d.qubits.push_back({w10, w10 - anh(rng), g(rng), rate(rng), rate(rng)});
    }
    return d;
}

inline std::string config_path(const std::string& name) {
    return std::string(CQED_CONFIG_DIR) + "/" + name;
}

}  // namespace cqed::fixtures
