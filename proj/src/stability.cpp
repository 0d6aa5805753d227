#include "cqed/stability.hpp"

#include <cmath>
#include <complex>

#include <boost/math/tools/roots.hpp>

#include "cqed/steadystate.hpp"

namespace cqed {

namespace {

// Accumulates sum Delta_i lambda_i^2 sigma, sum Delta_i lambda_i^4 sigma <Pi_i>
// and sum Delta_i lambda_i^4 sigma, all in MHz.
struct QuarticSums {
    double pull = 0.0;
    double quartic_occupied = 0.0;
    double quartic = 0.0;
};

QuarticSums quartic_sums(const LogicalState& state, const SpectralParams& params) {
    if (state.bits.size() != params.qubits.size())
        throw ValidationError("state '" + state.label() + "' does not match the device qubit count");
    const auto pops = logical_sigma_z(state, params.levels);
    QuarticSums s;
    for (std::size_t j = 0; j < params.qubits.size(); ++j) {
        const QubitSpectrum& q = params.qubits[j];
        for (int i = 0; i < params.levels - 1; ++i) {
            const double d = q.delta_ghz(i) * kMHzPerGHz;
            const double l2 = q.lambda(i) * q.lambda(i);
            const double sz = pops[j].sigma_z(i);
            s.pull += d * l2 * sz;
            s.quartic_occupied += d * l2 * l2 * sz * pops[j].occupation(i + 1);
            s.quartic += d * l2 * l2 * sz;
        }
    }
    return s;
}

}  // namespace

StabilityParams stability_params(const LogicalState& state, const SpectralParams& params, double delta_c_mhz) {
    const QuarticSums s = quartic_sums(state, params);
    return {delta_c_mhz + s.pull - 2.0 * s.quartic_occupied, -2.0 * s.quartic};
}

double h_function(double n, const LogicalState& state, const SpectralParams& params, double delta_c_mhz) {
    if (!(n >= 0)) throw ValidationError("photon number must be >= 0");
    const QuarticSums s = quartic_sums(state, params);
    return delta_c_mhz + s.pull - 2.0 * s.quartic_occupied - 2.0 * s.quartic * n;
}

Eigen::Matrix2cd stability_matrix(double n, const StabilityParams& sp, double kappa_mhz) {
    using C = std::complex<double>;
    const C i(0.0, 1.0);
    const double h = sp.delta_omega_mhz + sp.chi_nl_mhz * n;
    const double dh = sp.chi_nl_mhz;
    const double alpha2 = n;  // alpha_0^2 with the phase chosen real
    Eigen::Matrix2cd a;
    a << i * (n * dh + h) + kappa_mhz / 2, i * alpha2 * dh, -i * alpha2 * dh, -i * (n * dh + h) + kappa_mhz / 2;
    return a;
}

double stability_determinant(double n, const StabilityParams& sp, double kappa_mhz) {
    return stability_matrix(n, sp, kappa_mhz).determinant().real();
}

BifurcationReport bifurcation(const LogicalState& state, const SpectralParams& params, double kappa_mhz,
                              double delta_c_mhz) {
    if (!(kappa_mhz > 0)) throw ValidationError("kappa must be > 0");
    const StabilityParams sp = stability_params(state, params, delta_c_mhz);
    BifurcationReport r;
    r.delta_omega_mhz = sp.delta_omega_mhz;
    r.chi_nl_mhz = sp.chi_nl_mhz;
    const double dw = sp.delta_omega_mhz, chi = sp.chi_nl_mhz;
    const double disc = dw * dw - 0.75 * kappa_mhz * kappa_mhz;
    r.exists = disc > 0 && chi * dw < 0;
    if (!r.exists) return r;
    const double root = std::sqrt(disc);
    const double n1 = (-2.0 * dw - root) / (3.0 * chi);
    const double n2 = (-2.0 * dw + root) / (3.0 * chi);
    auto eps = [&](double n) {
        const double h = dw + chi * n;
        return std::sqrt(n * (0.25 * kappa_mhz * kappa_mhz + h * h));
    };
    r.n1 = n1;
    r.n2 = n2;
    r.epsilon1 = eps(n1);
    r.epsilon2 = eps(n2);
    return r;
}

FullModelFolds full_model_folds(const LogicalState& state, const SpectralParams& params, double kappa_mhz,
                                double delta_c_mhz) {
    const ChiShift chi(state, params);
    const double k2 = 0.25 * kappa_mhz * kappa_mhz;
    // d(eps^2)/dn
    auto slope = [&](double n) {
        const double det = delta_c_mhz + chi(n);
        return det * det + k2 + 2.0 * n * det * chi.derivative(n);
    };
    auto eps = [&](double n) {
        const double det = delta_c_mhz + chi(n);
        return std::sqrt(n * (det * det + k2));
    };

    FullModelFolds out;
    const int points = 4000;
    const double lo_exp = -8.0, hi_exp = 12.0;
    double prev_n = std::pow(10.0, lo_exp);
    double prev_s = slope(prev_n);
    for (int k = 1; k <= points; ++k) {
        const double n = std::pow(10.0, lo_exp + (hi_exp - lo_exp) * k / points);
        const double s = slope(n);
        if ((prev_s > 0) != (s > 0)) {
            boost::uintmax_t iters = 200;
            auto tol = boost::math::tools::eps_tolerance<double>(50);
            auto [a, b] = boost::math::tools::toms748_solve(slope, prev_n, n, prev_s, s, tol, iters);
            const double root = 0.5 * (a + b);
            const FoldPoint fp{root, eps(root)};
            if (prev_s > 0 && !out.low_branch_end)
                out.low_branch_end = fp;
            else if (prev_s <= 0 && !out.high_branch_end)
                out.high_branch_end = fp;
        }
        prev_n = n;
        prev_s = s;
    }
    return out;
}

}  // namespace cqed
