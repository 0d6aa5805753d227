#pragma once

#include <optional>

#include <Eigen/Dense>

#include "cqed/model.hpp"
#include "cqed/spectrum.hpp"

namespace cqed {

// Quartic-order expansion of the steady-state equation:
//   h(n) = delta_c + sum Delta_i (lambda_i^2 - 2 lambda_i^4 (n + <Pi_i>)) sigma_{z,i}
//        = delta_omega + chi_nl * n.
struct StabilityParams {
    double delta_omega_mhz = 0.0;
    double chi_nl_mhz = 0.0;
};

struct BifurcationReport {
    bool exists = false;
    double delta_omega_mhz = 0.0;
    double chi_nl_mhz = 0.0;
    // Fold points of the S-curve. (n1, epsilon1) ends the high branch on the way
    // down, (n2, epsilon2) ends the low branch on the way up, so epsilon1 <= epsilon2
    // and n2 <= n1.
    std::optional<double> n1, n2, epsilon1, epsilon2;
};

double h_function(double n, const LogicalState& state, const SpectralParams& params, double delta_c_mhz);

StabilityParams stability_params(const LogicalState& state, const SpectralParams& params, double delta_c_mhz);

// Linearisation matrix around a steady state with photon number n (real amplitude).
Eigen::Matrix2cd stability_matrix(double n, const StabilityParams& sp, double kappa_mhz);

// Det A = kappa^2/4 + delta_omega^2 + 4 chi_nl delta_omega n + 3 chi_nl^2 n^2.
double stability_determinant(double n, const StabilityParams& sp, double kappa_mhz);

// Exists iff delta_omega^2 > 3 kappa^2 / 4 and chi_nl * delta_omega < 0.
// Roots of Det A = 0: n = [-2 delta_omega -/+ sqrt(delta_omega^2 - 3 kappa^2/4)] / (3 chi_nl),
// epsilon = sqrt(n (kappa^2/4 + h(n)^2)).
BifurcationReport bifurcation(const LogicalState& state, const SpectralParams& params, double kappa_mhz,
                              double delta_c_mhz);

// Turning points of eps^2(n) = n [(delta_c + chi(n))^2 + kappa^2/4] for the full
// (unexpanded) shift, located by bracketing on a log grid of n.
struct FoldPoint {
    double n;
    double epsilon_mhz;
};
struct FullModelFolds {
    std::optional<FoldPoint> low_branch_end;   // local maximum of eps(n), up-sweep jump
    std::optional<FoldPoint> high_branch_end;  // local minimum of eps(n), down-sweep jump
};
FullModelFolds full_model_folds(const LogicalState& state, const SpectralParams& params, double kappa_mhz,
                                double delta_c_mhz);

}  // namespace cqed
