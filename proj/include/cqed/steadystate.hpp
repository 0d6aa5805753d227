#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cqed/model.hpp"
#include "cqed/spectrum.hpp"

namespace cqed {

enum class Branch { low, high };
enum class SweepDirection { up, down };

std::string to_string(Branch b);
std::string to_string(SweepDirection d);

struct SolverOptions {
    double tolerance = 1e-10;
    double damping = 0.5;
    int max_iterations = 10000;
};

struct SteadyStateResult {
    double n = 0.0;
    Branch branch = Branch::low;
    double chi_mhz = 0.0;
    double effective_frequency_ghz = 0.0;  // omega_c + chi
    double residual = 0.0;                 // |n - F(n)| / (1 + n)
    int iterations = 0;
    bool converged = false;
};

struct SweepPoint {
    double epsilon_mhz;
    SteadyStateResult result;
};

struct SweepResult {
    std::vector<SweepPoint> points;
    SweepDirection direction = SweepDirection::up;
    std::optional<double> jump_epsilon_mhz;
    std::optional<std::size_t> jump_index;
};

// Precomputed terms of the nonlinear shift
//   chi(n) = sum_j sum_i g_i lambda_i sigma_{z,i} / sqrt(1 + 4 lambda_i^2 (n + <Pi_i>)).
// Terms are summed in (qubit, transition) order with plain loops so that
// transitions with sigma_z = 0 add exact zeros.
class ChiShift {
public:
    ChiShift(const LogicalState& state, const SpectralParams& params);

    double operator()(double n) const;       // MHz
    double derivative(double n) const;       // MHz per photon
    double bare() const;                     // n -> 0 limit with the <Pi_i> offset dropped, MHz

private:
    std::vector<double> coef_mhz_;    // g_i lambda_i sigma_{z,i}
    std::vector<double> four_l2_;     // 4 lambda_i^2
    std::vector<double> occupation_;  // <Pi_i>
};

double chi_shift(double n, const LogicalState& state, const SpectralParams& params);
double bare_chi_shift(const LogicalState& state, const SpectralParams& params);

// F(n) = eps^2 / [(delta_c + chi(n))^2 + kappa^2/4].
double photon_map(double n, const DriveSpec& drive, const ChiShift& chi, double kappa_mhz);

// Canonical seed of the high branch: the supremum of F over n >= 0. The shift
// moves monotonically from chi(0) to 0, so the effective detuning passes through
// zero when delta_c + chi(0) and delta_c differ in sign; otherwise the bound is
// set by the smaller end point. At delta_c = 0 this is the chi -> 0 asymptote
// 4 eps^2 / kappa^2.
double high_branch_seed(const DriveSpec& drive, double chi0_mhz, double kappa_mhz);

// Damped fixed-point iteration n <- (1-d) n + d F(n) from `seed`. Non-convergence
// is reported through `converged = false`, never as an exception.
SteadyStateResult solve_branch(const DriveSpec& drive, const LogicalState& state, const SpectralParams& params,
                               double kappa_mhz, double seed, Branch label, const SolverOptions& opts = {});

// Canonical seeds: 0 for the low branch, high_branch_seed for the high branch.
SteadyStateResult solve_branch(const DriveSpec& drive, const LogicalState& state, const SpectralParams& params,
                               double kappa_mhz, Branch branch, const SolverOptions& opts = {});

// Hysteresis sweep along a strictly monotone grid (increasing for up, decreasing
// for down), each point seeded with the previous n. Throws NumericError naming
// the grid index when a point fails to converge.
SweepResult sweep_drive(const std::vector<double>& grid_mhz, SweepDirection direction, const LogicalState& state,
                        const SpectralParams& params, double kappa_mhz, double delta_c_mhz,
                        const SolverOptions& opts = {});

// n_bright (high branch) / n_dark (low branch).
double contrast(const LogicalState& bright, const LogicalState& dark, const DriveSpec& drive,
                const SpectralParams& params, double kappa_mhz, const SolverOptions& opts = {});

// 20 log10(eps / MHz) and its inverse.
double epsilon_to_db(double epsilon_mhz);
double db_to_epsilon(double db);
std::vector<double> db_grid(double start_db, double stop_db, int points);
std::vector<double> linear_grid(double start, double stop, int points);

}  // namespace cqed
