#include "cqed/spectrum.hpp"

#include <cmath>
#include <string>

namespace cqed {

SpectralParams detunings_and_lambdas(const DeviceSpec& device) {
    return detunings_and_lambdas(device, device.levels);
}

SpectralParams detunings_and_lambdas(const DeviceSpec& device, int levels) {
    if (levels < 2 || levels > kMaxLevels) throw ValidationError("levels out of range");
    SpectralParams out;
    out.omega_c_ghz = device.cavity.omega_c_ghz;
    out.levels = levels;
    for (int j = 0; j < device.num_qubits(); ++j) {
        const QubitSpec& q = device.qubits[j];
        QubitSpectrum s;
        s.transitions_ghz = transition_frequencies(q, levels);
        s.tilde_omega_ghz = transformed_frequencies(s.transitions_ghz);
        s.g_ghz = coupling_ladder(q.g1_ghz, levels);
        s.delta_ghz = s.transitions_ghz.array() - device.cavity.omega_c_ghz;

        const Eigen::VectorXd from_case = case_formula_detunings(s.tilde_omega_ghz, device.cavity.omega_c_ghz);
        s.lambda.resize(levels - 1);
        for (int i = 0; i < levels - 1; ++i) {
            const std::string where = "qubit " + std::to_string(j + 1) + " transition " + std::to_string(i + 1);
            if (s.delta_ghz(i) == 0.0) throw ValidationError(where + ": zero detuning from the cavity");
            s.lambda(i) = s.g_ghz(i) / s.delta_ghz(i);
            if (std::abs(s.lambda(i)) >= 1.0)
                throw ValidationError(where + ": |g/Delta| = " + std::to_string(std::abs(s.lambda(i))) +
                                      " >= 1, outside the dispersive regime");
            if (std::abs(from_case(i) - s.delta_ghz(i)) > 1e-10 * std::abs(s.delta_ghz(i)))
                throw NumericError(where + ": case-formula detuning " + std::to_string(from_case(i)) +
                                   " GHz disagrees with omega_{i,i-1} - omega_c");
        }
        out.qubits.push_back(std::move(s));
    }
    return out;
}

}  // namespace cqed
