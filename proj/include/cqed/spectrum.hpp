#pragma once

#include <vector>

#include <Eigen/Dense>

#include "cqed/model.hpp"

namespace cqed {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Tridiagonal (2, -1) matrix of size (M-1) linking level energies to sigma_z weights.
template <typename Scalar = double>
Matrix<Scalar> toeplitz_matrix(int levels) {
    const int n = levels - 1;
    Matrix<Scalar> a = Matrix<Scalar>::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        a(i, i) = Scalar(2);
        if (i + 1 < n) a(i, i + 1) = a(i + 1, i) = Scalar(-1);
    }
    return a;
}

// Closed-form inverse: -i (j - n - 1) / (n + 1) for i <= j (1-based), symmetric.
template <typename Scalar = double>
Matrix<Scalar> toeplitz_inverse(int levels) {
    const int n = levels - 1;
    Matrix<Scalar> inv(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            Scalar v = -Scalar(i) * Scalar(j - n - 1) / Scalar(n + 1);
            inv(i - 1, j - 1) = v;
            inv(j - 1, i - 1) = v;
        }
    return inv;
}

// tilde omega_i = sum_k 2 A^-1_{ik} omega_{k,k-1}.
template <typename Derived>
Vector<typename Derived::Scalar> transformed_frequencies(const Eigen::MatrixBase<Derived>& transitions) {
    using Scalar = typename Derived::Scalar;
    const int levels = static_cast<int>(transitions.size()) + 1;
    return Scalar(2) * toeplitz_inverse<Scalar>(levels) * transitions;
}

// Detuning of transition i read off the sigma_z-form Hamiltonian:
// tilde omega_i - omega_c minus half of each neighbouring tilde omega.
template <typename Derived>
Vector<typename Derived::Scalar> case_formula_detunings(const Eigen::MatrixBase<Derived>& tilde,
                                                        typename Derived::Scalar omega_c) {
    using Scalar = typename Derived::Scalar;
    const Eigen::Index n = tilde.size();
    Vector<Scalar> out(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        Scalar v = tilde(i) - omega_c;
        if (i > 0) v -= tilde(i - 1) / Scalar(2);
        if (i + 1 < n) v -= tilde(i + 1) / Scalar(2);
        out(i) = v;
    }
    return out;
}

struct QubitSpectrum {
    Eigen::VectorXd transitions_ghz;  // omega_{i,i-1}
    Eigen::VectorXd tilde_omega_ghz;
    Eigen::VectorXd delta_ghz;        // omega_{i,i-1} - omega_c
    Eigen::VectorXd g_ghz;
    Eigen::VectorXd lambda;           // g_i / Delta_i
};

struct SpectralParams {
    double omega_c_ghz = 0.0;
    int levels = 3;
    std::vector<QubitSpectrum> qubits;
};

// Throws ValidationError on zero detuning or |lambda| >= 1, NumericError if the
// case formula disagrees with omega_{i,i-1} - omega_c beyond 1e-10 relative.
SpectralParams detunings_and_lambdas(const DeviceSpec& device);

// Same with an explicit level count; levels = 2 gives the two-level truncation.
SpectralParams detunings_and_lambdas(const DeviceSpec& device, int levels);

}  // namespace cqed
