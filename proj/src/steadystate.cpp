#include "cqed/steadystate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cqed {

std::string to_string(Branch b) { return b == Branch::low ? "low" : "high"; }
std::string to_string(SweepDirection d) { return d == SweepDirection::up ? "up" : "down"; }

ChiShift::ChiShift(const LogicalState& state, const SpectralParams& params) {
    if (state.bits.size() != params.qubits.size())
        throw ValidationError("state '" + state.label() + "' does not match the device qubit count " +
                              std::to_string(params.qubits.size()));
    const auto pops = logical_sigma_z(state, params.levels);
    for (std::size_t j = 0; j < params.qubits.size(); ++j) {
        const QubitSpectrum& q = params.qubits[j];
        for (int i = 0; i < params.levels - 1; ++i) {
            const double l = q.lambda(i);
            coef_mhz_.push_back(q.g_ghz(i) * kMHzPerGHz * l * pops[j].sigma_z(i));
            four_l2_.push_back(4.0 * l * l);
            occupation_.push_back(pops[j].occupation(i + 1));
        }
    }
}

double ChiShift::operator()(double n) const {
    double sum = 0.0;
    for (std::size_t k = 0; k < coef_mhz_.size(); ++k)
        sum += coef_mhz_[k] / std::sqrt(1.0 + four_l2_[k] * (n + occupation_[k]));
    return sum;
}

double ChiShift::derivative(double n) const {
    double sum = 0.0;
    for (std::size_t k = 0; k < coef_mhz_.size(); ++k) {
        const double s = 1.0 + four_l2_[k] * (n + occupation_[k]);
        sum += -0.5 * coef_mhz_[k] * four_l2_[k] / (s * std::sqrt(s));
    }
    return sum;
}

double ChiShift::bare() const {
    double sum = 0.0;
    for (double c : coef_mhz_) sum += c;
    return sum;
}

double chi_shift(double n, const LogicalState& state, const SpectralParams& params) {
    if (!(n >= 0)) throw ValidationError("photon number must be >= 0");
    return ChiShift(state, params)(n);
}

double bare_chi_shift(const LogicalState& state, const SpectralParams& params) {
    return ChiShift(state, params).bare();
}

double photon_map(double n, const DriveSpec& drive, const ChiShift& chi, double kappa_mhz) {
    const double detuning = drive.delta_c_mhz + chi(n);
    return drive.epsilon_mhz * drive.epsilon_mhz / (detuning * detuning + 0.25 * kappa_mhz * kappa_mhz);
}

double high_branch_seed(const DriveSpec& drive, double chi0_mhz, double kappa_mhz) {
    const double start = drive.delta_c_mhz + chi0_mhz, end = drive.delta_c_mhz;
    const double closest = (start > 0) != (end > 0) ? 0.0 : std::min(std::abs(start), std::abs(end));
    return drive.epsilon_mhz * drive.epsilon_mhz / (closest * closest + 0.25 * kappa_mhz * kappa_mhz);
}

namespace {

SteadyStateResult iterate(const DriveSpec& drive, const ChiShift& chi, double omega_c_ghz, double kappa_mhz,
                          double seed, Branch label, const SolverOptions& opts) {
    validate(drive);
    if (!(kappa_mhz > 0)) throw ValidationError("kappa must be > 0");
    if (!(seed >= 0)) throw ValidationError("seed photon number must be >= 0");
    if (!(opts.damping > 0 && opts.damping <= 1)) throw ValidationError("damping must be in (0, 1]");

    SteadyStateResult r;
    r.branch = label;
    double n = seed;
    const double d = opts.damping;
    for (int it = 0; it <= opts.max_iterations; ++it) {
        const double f = photon_map(n, drive, chi, kappa_mhz);
        const double residual = std::abs(n - f) / (1.0 + n);
        r.iterations = it;
        r.residual = residual;
        if (residual <= opts.tolerance) {
            r.converged = true;
            break;
        }
        if (it == opts.max_iterations) break;
        // On a negative slope F' the plain step oscillates once d > 2 / (1 - F');
        // 1 / (1 - F') is the Newton step and keeps the iteration on its branch.
        const double detuning = drive.delta_c_mhz + chi(n);
        const double slope = -2.0 * f * detuning * chi.derivative(n) /
                             (detuning * detuning + 0.25 * kappa_mhz * kappa_mhz);
        const double step = slope < 0 ? std::min(d, 1.0 / (1.0 - slope)) : d;
        n = (1.0 - step) * n + step * f;
    }
    r.n = n;
    r.chi_mhz = chi(n);
    r.effective_frequency_ghz = omega_c_ghz + r.chi_mhz / kMHzPerGHz;
    return r;
}

}  // namespace

SteadyStateResult solve_branch(const DriveSpec& drive, const LogicalState& state, const SpectralParams& params,
                               double kappa_mhz, double seed, Branch label, const SolverOptions& opts) {
    return iterate(drive, ChiShift(state, params), params.omega_c_ghz, kappa_mhz, seed, label, opts);
}

SteadyStateResult solve_branch(const DriveSpec& drive, const LogicalState& state, const SpectralParams& params,
                               double kappa_mhz, Branch branch, const SolverOptions& opts) {
    const ChiShift chi(state, params);
    const double seed = branch == Branch::low ? 0.0 : high_branch_seed(drive, chi(0.0), kappa_mhz);
    return iterate(drive, chi, params.omega_c_ghz, kappa_mhz, seed, branch, opts);
}

SweepResult sweep_drive(const std::vector<double>& grid_mhz, SweepDirection direction, const LogicalState& state,
                        const SpectralParams& params, double kappa_mhz, double delta_c_mhz,
                        const SolverOptions& opts) {
    for (std::size_t k = 1; k < grid_mhz.size(); ++k) {
        const bool ok = direction == SweepDirection::up ? grid_mhz[k] > grid_mhz[k - 1] : grid_mhz[k] < grid_mhz[k - 1];
        if (!ok)
            throw ValidationError("sweep grid is not strictly " +
                                  std::string(direction == SweepDirection::up ? "increasing" : "decreasing") +
                                  " at index " + std::to_string(k));
    }
    const ChiShift chi(state, params);
    const Branch start = direction == SweepDirection::up ? Branch::low : Branch::high;
    const Branch after = direction == SweepDirection::up ? Branch::high : Branch::low;

    SweepResult out;
    out.direction = direction;
    for (std::size_t k = 0; k < grid_mhz.size(); ++k) {
        const DriveSpec drive{grid_mhz[k], delta_c_mhz};
        double seed;
        if (k == 0)
            seed = start == Branch::low ? 0.0 : high_branch_seed(drive, chi(0.0), kappa_mhz);
        else
            seed = out.points.back().result.n;
        const Branch label = out.jump_index ? after : start;
        SteadyStateResult r = iterate(drive, chi, params.omega_c_ghz, kappa_mhz, seed, label, opts);
        if (!r.converged)
            throw NumericError("steady state did not converge at sweep grid index " + std::to_string(k) +
                               " (epsilon = " + std::to_string(grid_mhz[k]) + " MHz, residual " +
                               std::to_string(r.residual) + ")");
        if (k > 0 && !out.jump_index) {
            const double prev = out.points.back().result.n;
            const double hi = std::max(prev, r.n), lo = std::min(prev, r.n);
            if (lo > 0 && hi > 10.0 * lo) {
                out.jump_index = k;
                out.jump_epsilon_mhz = grid_mhz[k];
                r.branch = after;
            }
        }
        out.points.push_back({grid_mhz[k], r});
    }
    return out;
}

double contrast(const LogicalState& bright, const LogicalState& dark, const DriveSpec& drive,
                const SpectralParams& params, double kappa_mhz, const SolverOptions& opts) {
    if (drive.epsilon_mhz == 0.0) throw ValidationError("contrast is undefined at zero drive (0/0)");
    const auto b = solve_branch(drive, bright, params, kappa_mhz, Branch::high, opts);
    const auto d = solve_branch(drive, dark, params, kappa_mhz, Branch::low, opts);
    if (!b.converged || !d.converged) throw NumericError("contrast: steady-state solve did not converge");
    if (d.n <= 0.0) throw NumericError("contrast: dark-state photon number is zero");
    return b.n / d.n;
}

double epsilon_to_db(double epsilon_mhz) { return 20.0 * std::log10(epsilon_mhz); }
double db_to_epsilon(double db) { return std::pow(10.0, db / 20.0); }

std::vector<double> db_grid(double start_db, double stop_db, int points) {
    std::vector<double> out;
    for (double db : linear_grid(start_db, stop_db, points)) out.push_back(db_to_epsilon(db));
    return out;
}

std::vector<double> linear_grid(double start, double stop, int points) {
    if (points < 1) throw ValidationError("grid needs at least one point");
    std::vector<double> out(points);
    for (int k = 0; k < points; ++k)
        out[k] = points == 1 ? start : start + (stop - start) * static_cast<double>(k) / (points - 1);
    return out;
}

}  // namespace cqed
