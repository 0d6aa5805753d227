#include "cqed/oracle.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

#include "cqed/errors.hpp"
#include "cqed/spectrum.hpp"
#include "cqed/steadystate.hpp"
#include "detail/parallel.hpp"

namespace cqed {

namespace {

using cd = std::complex<double>;

MatrixC annihilation(int cutoff) {
    MatrixC a = MatrixC::Zero(cutoff, cutoff);
    for (int k = 1; k < cutoff; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
    return a;
}

MatrixC ket_bra(int dim, int row, int col) {
    MatrixC m = MatrixC::Zero(dim, dim);
    m(row, col) = 1.0;
    return m;
}

// Embeds per-factor operators into cavity x qubit_1 x ... x qubit_N.
struct Space {
    int cutoff;
    std::vector<int> levels;

    MatrixC embed(const MatrixC& cavity_op, int qubit = -1, const MatrixC& qubit_op = {}) const {
        MatrixC out = cavity_op;
        for (std::size_t j = 0; j < levels.size(); ++j) {
            const MatrixC factor = static_cast<int>(j) == qubit ? qubit_op : MatrixC::Identity(levels[j], levels[j]);
            out = Eigen::kroneckerProduct(out, factor).eval();
        }
        return out;
    }
    MatrixC identity_cavity() const { return MatrixC::Identity(cutoff, cutoff); }
};

void check_size(const DeviceSpec& device, int cutoff) {
    if (cutoff < 4) throw ValidationError("Fock cutoff must be >= 4");
    if (device.num_qubits() > 2 || device.levels > 3)
        throw ValidationError("oracle is limited to N <= 2 qubits with M <= 3 levels (got N = " +
                              std::to_string(device.num_qubits()) + ", M = " + std::to_string(device.levels) + ")");
}

// Level energies E_k = sum_{i <= k} omega_{i,i-1}, GHz.
Eigen::VectorXd level_energies(const QubitSpec& q, int levels) {
    const Eigen::VectorXd w = transition_frequencies(q, levels);
    Eigen::VectorXd e = Eigen::VectorXd::Zero(levels);
    for (int k = 1; k < levels; ++k) e(k) = e(k - 1) + w(k - 1);
    return e;
}

SparseC constrained(const SparseC& l, Eigen::Index dim) {
    std::vector<Eigen::Triplet<cd>> t;
    t.reserve(l.nonZeros() + dim);
    for (int k = 0; k < l.outerSize(); ++k)
        for (SparseC::InnerIterator it(l, k); it; ++it)
            if (it.row() != 0) t.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()), it.value());
    for (Eigen::Index i = 0; i < dim; ++i) t.emplace_back(0, static_cast<int>(i + i * dim), cd{1.0, 0.0});
    SparseC a(l.rows(), l.cols());
    a.setFromTriplets(t.begin(), t.end());
    return a;
}

}  // namespace

TruncatedSystem build_system(const DeviceSpec& device, const DriveSpec& drive, const OracleOptions& opts) {
    validate(device);
    validate(drive);
    check_size(device, opts.fock_cutoff);

    Space space{opts.fock_cutoff, std::vector<int>(device.num_qubits(), device.levels)};
    const MatrixC a = annihilation(opts.fock_cutoff);
    const MatrixC ad = a.adjoint();
    const double omega_d = device.cavity.omega_c_ghz * kMHzPerGHz - drive.delta_c_mhz;

    TruncatedSystem sys;
    sys.fock_cutoff = opts.fock_cutoff;
    sys.levels = space.levels;
    sys.number = space.embed(ad * a);
    MatrixC h = drive.delta_c_mhz * sys.number + drive.epsilon_mhz * space.embed(a + ad);
    for (std::size_t j = 0; j < device.qubits.size(); ++j) {
        const QubitSpec& q = device.qubits[j];
        const int m = device.levels;
        const Eigen::VectorXd e = level_energies(q, m) * kMHzPerGHz;
        const Eigen::VectorXd g = coupling_ladder(q.g1_ghz, m) * kMHzPerGHz;
        MatrixC diag = MatrixC::Zero(m, m);
        for (int k = 0; k < m; ++k) diag(k, k) = e(k) - k * omega_d;
        h += space.embed(space.identity_cavity(), static_cast<int>(j), diag);
        for (int i = 1; i < m; ++i) {
            const MatrixC sigma = ket_bra(m, i - 1, i);  // |i-1><i|
            const MatrixC up = space.embed(ad, static_cast<int>(j), sigma);
            h += g(i - 1) * (up + up.adjoint());
        }
        if (opts.qubit_channels) {
            if (q.gamma1_mhz > 0)
                sys.collapse.push_back(std::sqrt(q.gamma1_mhz) *
                                       space.embed(space.identity_cavity(), static_cast<int>(j), ket_bra(m, 0, 1)));
            if (q.gamma_phi_mhz > 0) {
                MatrixC sz = ket_bra(m, 1, 1) - ket_bra(m, 0, 0);
                sys.collapse.push_back(std::sqrt(q.gamma_phi_mhz / 2) *
                                       space.embed(space.identity_cavity(), static_cast<int>(j), sz));
            }
        }
    }
    sys.hamiltonian = 0.5 * (h + h.adjoint());  // exact Hermitian; h is Hermitian up to rounding
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + h.cwiseAbs().maxCoeff()))
        throw NumericError("oracle Hamiltonian is not Hermitian");
    sys.collapse.insert(sys.collapse.begin(), std::sqrt(device.cavity.kappa_mhz) * space.embed(a));
    return sys;
}

SparseC liouvillian(const TruncatedSystem& sys) {
    const Eigen::Index d = sys.dim();
    const SparseC id = MatrixC::Identity(d, d).sparseView();
    const cd i{0.0, 1.0};
    const SparseC h = sys.hamiltonian.sparseView();
    SparseC l = -i * (SparseC(Eigen::kroneckerProduct(id, h)) - SparseC(Eigen::kroneckerProduct(SparseC(h.transpose()), id)));
    for (const MatrixC& c : sys.collapse) {
        const SparseC cs = c.sparseView();
        const SparseC cdc = (c.adjoint() * c).sparseView();
        l += SparseC(Eigen::kroneckerProduct(SparseC(cs.conjugate()), cs));
        l -= 0.5 * SparseC(Eigen::kroneckerProduct(id, cdc));
        l -= 0.5 * SparseC(Eigen::kroneckerProduct(SparseC(cdc.transpose()), id));
    }
    l.makeCompressed();
    return l;
}

double trace_leak(const SparseC& l, Eigen::Index dim) {
    Eigen::VectorXcd row = Eigen::VectorXcd::Zero(l.cols());
    for (int k = 0; k < l.outerSize(); ++k)
        for (SparseC::InnerIterator it(l, k); it; ++it)
            if (it.row() % (dim + 1) == 0) row(it.col()) += it.value();
    return row.cwiseAbs().maxCoeff();
}

SteadyState steady_state(const TruncatedSystem& sys) {
    if (sys.collapse.empty()) throw ValidationError("steady state needs at least one collapse operator");
    const Eigen::Index d = sys.dim();
    const SparseC a = constrained(liouvillian(sys), d);
    Eigen::SparseLU<SparseC, Eigen::COLAMDOrdering<int>> lu;
    lu.compute(a);
    if (lu.info() != Eigen::Success) throw NumericError("Liouvillian factorisation failed: " + lu.lastErrorMessage());
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(d * d);
    rhs(0) = 1.0;
    const Eigen::VectorXcd x = lu.solve(rhs);
    if (lu.info() != Eigen::Success || !x.allFinite()) throw NumericError("Liouvillian solve failed");

    SteadyState s;
    s.rho = Eigen::Map<const MatrixC>(x.data(), d, d);
    s.hermiticity_error = (s.rho - s.rho.adjoint()).cwiseAbs().maxCoeff();
    const MatrixC herm = 0.5 * (s.rho + s.rho.adjoint());
    Eigen::SelfAdjointEigenSolver<MatrixC> eig(herm, Eigen::EigenvaluesOnly);
    s.min_eigenvalue = eig.eigenvalues().minCoeff();
    s.trace_error = std::abs(s.rho.trace() - 1.0);
    s.photons = (herm * sys.number).trace().real();
    if (s.hermiticity_error > 1e-8 || s.min_eigenvalue < -1e-8 || s.trace_error > 1e-8)
        throw NumericError("oracle steady state is not a density matrix (hermiticity " +
                           std::to_string(s.hermiticity_error) + ", min eigenvalue " +
                           std::to_string(s.min_eigenvalue) + ")");
    return s;
}

Eigen::VectorXd liouvillian_singular_values(const TruncatedSystem& sys) {
    const Eigen::Index d = sys.dim();
    if (d * d > 4096) throw ValidationError("dense singular values are limited to dim^2 <= 4096");
    const MatrixC a = MatrixC(liouvillian(sys));
    Eigen::VectorXd sv = Eigen::BDCSVD<MatrixC>(a).singularValues();
    std::sort(sv.begin(), sv.end());
    return sv;
}

std::vector<CommutatorEntry> commutator_check(const DeviceSpec& device, int fock_cutoff) {
    validate(device);
    if (fock_cutoff < 2) throw ValidationError("Fock cutoff must be >= 2");
    const MatrixC a = annihilation(fock_cutoff);
    const MatrixC ad = a.adjoint();
    std::vector<CommutatorEntry> out;
    for (std::size_t j = 0; j < device.qubits.size(); ++j) {
        // One qubit at a time: H_0 does not couple qubits.
        const QubitSpec& q = device.qubits[j];
        const int m = device.levels;
        Space space{fock_cutoff, {m}};
        const Eigen::VectorXd e = level_energies(q, m);
        MatrixC h0 = device.cavity.omega_c_ghz * space.embed(ad * a);
        MatrixC diag = MatrixC::Zero(m, m);
        for (int k = 0; k < m; ++k) diag(k, k) = e(k);
        h0 += space.embed(space.identity_cavity(), 0, diag);
        const Eigen::VectorXd w = transition_frequencies(q, m);
        for (int i = 1; i < m; ++i) {
            const MatrixC up = space.embed(ad, 0, ket_bra(m, i - 1, i));
            const MatrixC ip = up + up.adjoint(), im = up - up.adjoint();
            const MatrixC c = im * h0 - h0 * im;
            const cd coef = (ip.adjoint() * c).trace() / (ip.adjoint() * ip).trace();
            const double residual = (c - coef * ip).norm() / c.norm();
            if (residual > 1e-8 || std::abs(coef.imag()) > 1e-8 * std::abs(coef))
                throw NumericError("commutator [I-, H0] is not proportional to I+ for qubit " + std::to_string(j + 1) +
                                   ", transition " + std::to_string(i) + " (residual " + std::to_string(residual) +
                                   ")");
            out.push_back({j, i, coef.real(), w(i - 1) - device.cavity.omega_c_ghz, residual});
        }
    }
    return out;
}

double OracleComparison::relative_deviation() const {
    return std::abs(semiclassical_photons - oracle_photons) / oracle_photons;
}

std::vector<OracleComparison> compare_low_branch(const DeviceSpec& device, double delta_c_mhz,
                                                 const std::vector<double>& epsilons, const OracleOptions& opts,
                                                 unsigned threads) {
    check_size(device, opts.fock_cutoff);
    const SpectralParams params = detunings_and_lambdas(device);
    const LogicalState ground{std::vector<int>(device.num_qubits(), 0)};
    std::vector<OracleComparison> out(epsilons.size());
    detail::parallel_for(epsilons.size(), threads, [&](std::size_t k) {
        const DriveSpec drive{epsilons[k], delta_c_mhz};
        const auto semi = solve_branch(drive, ground, params, device.cavity.kappa_mhz, Branch::low);
        if (!semi.converged) throw NumericError("semiclassical low branch did not converge");
        out[k] = {epsilons[k], steady_state(build_system(device, drive, opts)).photons, semi.n};
    });
    return out;
}

}  // namespace cqed
