#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "cqed/model.hpp"

namespace cqed {

using MatrixC = Eigen::MatrixXcd;
using SparseC = Eigen::SparseMatrix<std::complex<double>>;

struct OracleOptions {
    int fock_cutoff = 30;
    // Intrinsic qubit channels: sqrt(gamma_1)|0><1| and sqrt(gamma_phi / 2) sigma_{z,1}.
    // Off by default; Purcell decay through the cavity already selects a unique
    // steady state.
    bool qubit_channels = false;
};

// Cavity (Fock cutoff) x qubits, qubit 1 the slowest index after the cavity.
// Frequencies in MHz, frame rotating at the drive frequency.
struct TruncatedSystem {
    int fock_cutoff = 0;
    std::vector<int> levels;
    MatrixC hamiltonian;
    std::vector<MatrixC> collapse;  // rates folded in
    MatrixC number;                 // a^dagger a

    Eigen::Index dim() const { return hamiltonian.rows(); }
};

// H = delta_c a^dag a + sum_k (E_k - k omega_d) Pi_k + sum_i g_i (a^dag sigma_i + a sigma_i^dag)
//     + eps (a + a^dag). Limited to N <= 2 qubits with M <= 3 levels.
TruncatedSystem build_system(const DeviceSpec& device, const DriveSpec& drive, const OracleOptions& opts = {});

// Column-stacked Liouvillian, vec(A rho B) = (B^T kron A) vec(rho).
SparseC liouvillian(const TruncatedSystem& sys);

// Largest |sum_i L_{(ii),k}|: the trace of L(rho) must vanish for every rho.
double trace_leak(const SparseC& liouv, Eigen::Index dim);

struct SteadyState {
    MatrixC rho;
    double photons;              // <a^dag a>
    double hermiticity_error;    // max |rho - rho^dag|
    double min_eigenvalue;       // of the Hermitian part
    double trace_error;          // |tr rho - 1|
};

// Solves L vec(rho) = 0 with the first row replaced by the trace condition,
// using a sparse LU factorisation. Throws NumericError when the factorisation
// fails or the result is not a density matrix to 1e-8.
SteadyState steady_state(const TruncatedSystem& sys);

// Singular values of the Liouvillian, ascending. A unique steady state shows up
// as a single (numerically) zero value well separated from the next one. Dense;
// only for small systems.
Eigen::VectorXd liouvillian_singular_values(const TruncatedSystem& sys);

struct CommutatorEntry {
    std::size_t qubit;
    int transition;  // i: |i-1> <-> |i>
    double coefficient_ghz;
    double expected_ghz;  // omega_{i,i-1} - omega_c
    double residual;      // |C - c I_+| / |C|
};

// [I_{-,i}, H_0] projected onto I_{+,i} = a^dag sigma_i + a sigma_i^dag for every
// qubit and transition, on a small Fock space. Throws NumericError if the
// commutator is not proportional to I_+ within 1e-8.
std::vector<CommutatorEntry> commutator_check(const DeviceSpec& device, int fock_cutoff = 6);

// Low-branch semiclassical photon number against the oracle for the ground state.
struct OracleComparison {
    double epsilon_mhz;
    double oracle_photons;
    double semiclassical_photons;
    double relative_deviation() const;
};
std::vector<OracleComparison> compare_low_branch(const DeviceSpec& device, double delta_c_mhz,
                                                 const std::vector<double>& epsilons_mhz,
                                                 const OracleOptions& opts = {}, unsigned threads = 0);

}  // namespace cqed
