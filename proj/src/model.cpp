#include "cqed/model.hpp"

#include <cmath>
#include <sstream>

namespace cqed {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw ValidationError(message);
}

std::string qubit_field(int j, const char* name) {
    return "qubit[" + std::to_string(j + 1) + "]." + name;
}

}  // namespace

LogicalState LogicalState::parse(std::string_view label) {
    require(!label.empty(), "logical state label is empty");
    LogicalState s;
    for (char c : label) {
        require(c == '0' || c == '1', "logical state label must contain only 0 and 1: " + std::string(label));
        s.bits.push_back(c - '0');
    }
    return s;
}

std::string LogicalState::label() const {
    std::string out;
    for (int b : bits) out.push_back(static_cast<char>('0' + b));
    return out;
}

int LogicalState::excitations() const {
    int k = 0;
    for (int b : bits) k += b;
    return k;
}

void validate(const DeviceSpec& device) {
    require(device.cavity.omega_c_ghz > 0, "cavity.omega_c_ghz must be > 0");
    require(device.cavity.kappa_mhz > 0, "cavity.kappa_mhz must be > 0");
    require(!device.qubits.empty(), "at least one [[qubit]] is required");
    require(device.levels >= 3 && device.levels <= kMaxLevels,
            "levels must be in [3, " + std::to_string(kMaxLevels) + "]");
    for (int j = 0; j < device.num_qubits(); ++j) {
        const QubitSpec& q = device.qubits[j];
        require(q.omega10_ghz > 0, qubit_field(j, "omega10_ghz") + " must be > 0");
        require(q.omega21_ghz > 0, qubit_field(j, "omega21_ghz") + " must be > 0");
        require(q.g1_ghz > 0, qubit_field(j, "g1_ghz") + " must be > 0");
        require(q.anharmonicity_ghz() != 0,
                qubit_field(j, "omega21_ghz") + " equals omega10_ghz (zero anharmonicity)");
        require(q.gamma1_mhz >= 0, qubit_field(j, "gamma1_mhz") + " must be >= 0");
        require(q.gamma_phi_mhz >= 0, qubit_field(j, "gamma_phi_mhz") + " must be >= 0");
        Eigen::VectorXd w = transition_frequencies(q, device.levels);
        for (int i = 0; i < w.size(); ++i) {
            require(w(i) > 0, qubit_field(j, "omega21_ghz") + ": extrapolated transition " +
                                  std::to_string(i + 1) + " is not positive");
            require(w(i) != device.cavity.omega_c_ghz,
                    qubit_field(j, "omega10_ghz") + ": transition " + std::to_string(i + 1) +
                        " is resonant with the cavity (zero detuning)");
        }
    }
}

void validate(const DriveSpec& drive) {
    require(drive.epsilon_mhz >= 0, "drive epsilon must be >= 0");
    require(std::isfinite(drive.delta_c_mhz), "drive delta_c must be finite");
}

std::vector<std::string> hierarchy_warnings(const DeviceSpec& device, double factor) {
    std::vector<std::string> out;
    auto check = [&](double small, double large, const std::string& what) {
        if (large < factor * small) {
            std::ostringstream msg;
            msg << what << ": " << small << " MHz vs " << large << " MHz (factor " << large / small
                << " < " << factor << ")";
            out.push_back(msg.str());
        }
    };
    const double kappa = device.cavity.kappa_mhz;
    const double wc = device.cavity.omega_c_ghz * kMHzPerGHz;
    for (int j = 0; j < device.num_qubits(); ++j) {
        const QubitSpec& q = device.qubits[j];
        const std::string tag = "qubit " + std::to_string(j + 1);
        check(std::max(q.gamma1_mhz, q.gamma_phi_mhz), kappa, tag + " intrinsic rates << kappa");
        Eigen::VectorXd w = transition_frequencies(q, device.levels);
        Eigen::VectorXd g = coupling_ladder(q.g1_ghz, device.levels);
        for (int i = 0; i < w.size(); ++i) {
            const double gi = g(i) * kMHzPerGHz;
            const double disp = gi * gi / std::abs((w(i) - device.cavity.omega_c_ghz) * kMHzPerGHz);
            const std::string t = tag + " transition " + std::to_string(i + 1);
            check(kappa, disp, t + " kappa << g^2/|Delta|");
            check(disp, gi, t + " g^2/|Delta| << g");
            check(gi, wc, t + " g << omega_c");
        }
    }
    return out;
}

Eigen::VectorXd coupling_ladder(double g1, int levels) {
    Eigen::VectorXd g(levels - 1);
    for (int i = 1; i < levels; ++i) g(i - 1) = std::sqrt(static_cast<double>(i)) * g1;
    return g;
}

Eigen::VectorXd transition_frequencies(const QubitSpec& qubit, int levels) {
    Eigen::VectorXd w(levels - 1);
    const double a = qubit.anharmonicity_ghz();
    w(0) = qubit.omega10_ghz;
    if (levels > 2) w(1) = qubit.omega21_ghz;
    for (int i = 3; i < levels; ++i) w(i - 1) = qubit.omega10_ghz + (i - 1) * a;
    return w;
}

std::vector<QubitPopulation> logical_sigma_z(const LogicalState& state, int levels) {
    std::vector<QubitPopulation> out;
    out.reserve(state.bits.size());
    for (int bit : state.bits) {
        QubitPopulation p;
        p.occupation = Eigen::VectorXd::Zero(levels);
        p.occupation(bit) = 1.0;
        p.sigma_z.resize(levels - 1);
        for (int i = 1; i < levels; ++i) p.sigma_z(i - 1) = p.occupation(i) - p.occupation(i - 1);
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<LogicalState> all_states(int num_qubits) {
    std::vector<LogicalState> out;
    const int count = 1 << num_qubits;
    for (int k = 0; k < count; ++k) {
        LogicalState s;
        for (int j = num_qubits - 1; j >= 0; --j) s.bits.push_back((k >> j) & 1);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace cqed
