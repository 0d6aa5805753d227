#include <gtest/gtest.h>

#include <cmath>

#include "cqed/oracle.hpp"
#include "cqed/spectrum.hpp"
#include "cqed/steadystate.hpp"
#include "test_support.hpp"

using namespace cqed;

TEST(BuildSystem, Dimensions) {
    auto sys = build_system(fixtures::single_qubit_device(), {1.0, 0.0}, {40});
    EXPECT_EQ(sys.dim(), 120);
    auto two = build_system(fixtures::fig2_device(), {1.0, 0.0}, {6});
    EXPECT_EQ(two.dim(), 54);
    EXPECT_EQ(two.collapse.size(), 1u);
}

TEST(BuildSystem, DecoupledUndrivenIsDiagonal) {
    DeviceSpec d = fixtures::single_qubit_device();
    auto sys = build_system(d, {0.0, -3.0}, {8});
    // Zero the coupling by hand through a tiny g and check the off-diagonal scale.
    d.qubits[0].g1_ghz = 1e-12;
    auto weak = build_system(d, {0.0, -3.0}, {8});
    MatrixC off = weak.hamiltonian;
    off.diagonal().setZero();
    EXPECT_LT(off.cwiseAbs().maxCoeff(), 1e-8);
    EXPECT_GT((sys.hamiltonian - weak.hamiltonian).cwiseAbs().maxCoeff(), 1.0);
}

TEST(BuildSystem, Hermitian) {
    auto sys = build_system(fixtures::single_qubit_device(), {5.0, -2.0}, {30});
    EXPECT_LE((sys.hamiltonian - sys.hamiltonian.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(BuildSystem, SizeLimits) {
    EXPECT_THROW(build_system(fixtures::fig4_device(), {1.0, 0.0}, {6}), ValidationError);
    EXPECT_THROW(build_system(fixtures::single_qubit_device(), {1.0, 0.0}, {3}), ValidationError);
    EXPECT_THROW(build_system(fixtures::single_qubit_device(4), {1.0, 0.0}, {6}), ValidationError);
}

TEST(Liouvillian, ConservesTrace) {
    for (bool channels : {false, true}) {
        auto sys = build_system(fixtures::fig2_device(), {3.0, -5.0}, {6, channels});
        auto l = liouvillian(sys);
        EXPECT_LE(trace_leak(l, sys.dim()), 1e-10) << channels;
    }
}

TEST(SteadyState, UndrivenIsVacuumGround) {
    auto sys = build_system(fixtures::single_qubit_device(), {0.0, 0.0}, {10});
    auto s = steady_state(sys);
    EXPECT_NEAR(s.photons, 0.0, 1e-12);
    EXPECT_NEAR(std::abs(s.rho(0, 0)), 1.0, 1e-10);
}

TEST(SteadyState, DensityMatrixProperties) {
    for (bool channels : {false, true}) {
        auto s = steady_state(build_system(fixtures::fig2_device(), {6.0, -10.0}, {6, channels}));
        EXPECT_LE(s.hermiticity_error, 1e-8);
        EXPECT_GE(s.min_eigenvalue, -1e-8);
        EXPECT_LE(s.trace_error, 1e-10);
    }
}

TEST(SteadyState, UniqueOnSmallSystem) {
    auto sys = build_system(fixtures::single_qubit_device(), {2.0, 0.0}, {6});
    auto sv = liouvillian_singular_values(sys);
    ASSERT_GE(sv.size(), 2);
    EXPECT_GE(sv(1), 1e6 * sv(0));
}

TEST(SteadyState, CutoffConvergence) {
    const auto d = fixtures::single_qubit_device();
    const DriveSpec drive{14.0, 0.0};
    const double n30 = steady_state(build_system(d, drive, {30})).photons;
    const double n40 = steady_state(build_system(d, drive, {40})).photons;
    EXPECT_LE(n30, 0.5);
    EXPECT_LT(std::abs(n30 - n40) / n40, 1e-3);
}

TEST(SteadyState, MatchesSemiclassicalLowBranch) {
    auto cmp = compare_low_branch(fixtures::single_qubit_device(), 0.0, {2.0, 5.0, 8.0, 11.0, 14.0}, {30});
    ASSERT_EQ(cmp.size(), 5u);
    for (const auto& c : cmp) {
        EXPECT_LE(c.oracle_photons, 0.5);
        EXPECT_LE(c.relative_deviation(), 0.10) << c.epsilon_mhz;
    }
    EXPECT_GT(cmp.back().oracle_photons, 0.3);
}

TEST(CommutatorCheck, TransitionDetunings) {
    auto table = commutator_check(fixtures::single_qubit_device());
    ASSERT_EQ(table.size(), 2u);
    EXPECT_NEAR(table[0].coefficient_ghz, -0.708, 1e-8 * 0.708);
    EXPECT_NEAR(table[1].coefficient_ghz, -0.934, 1e-8 * 0.934);
    for (const auto& e : table) {
        EXPECT_NEAR(e.coefficient_ghz, e.expected_ghz, 1e-8 * std::abs(e.expected_ghz));
        EXPECT_LE(e.residual, 1e-8);
    }
    // omega_20 - omega_c would be 3.363 GHz away; make sure it is not that.
    EXPECT_GT(std::abs(table[1].coefficient_ghz - (4.297 + 4.071 - 5.005)), 1.0);
}

TEST(CommutatorCheck, IndependentOfCoupling) {
    DeviceSpec d = fixtures::fig2_device();
    auto a = commutator_check(d);
    d.qubits[0].g1_ghz = 0.03;
    d.qubits[1].g1_ghz = 0.2;
    auto b = commutator_check(d);
    ASSERT_EQ(a.size(), 4u);
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k].coefficient_ghz, b[k].coefficient_ghz);
}

TEST(CommutatorCheck, HigherLevels) {
    auto table = commutator_check(fixtures::single_qubit_device(6), 4);
    ASSERT_EQ(table.size(), 5u);
    for (const auto& e : table) EXPECT_NEAR(e.coefficient_ghz, e.expected_ghz, 1e-8 * std::abs(e.expected_ghz));
}
