#include <gtest/gtest.h>

#include <cmath>

#include "cqed/parity.hpp"
#include "test_support.hpp"

using namespace cqed;

namespace {

// Bare shift written out from the transition frequencies, three levels:
// |0> contributes -g1 lambda1, |1> contributes g1 lambda1 - g2 lambda2.
double hand_bare_chi(const DeviceSpec& d, const LogicalState& s) {
    double chi = 0;
    for (std::size_t j = 0; j < d.qubits.size(); ++j) {
        const auto& q = d.qubits[j];
        const double d1 = q.omega10_ghz - d.cavity.omega_c_ghz, d2 = q.omega21_ghz - d.cavity.omega_c_ghz;
        const double g1 = q.g1_ghz, g2 = std::sqrt(2.0) * q.g1_ghz;
        const double t1 = g1 * g1 / d1 * 1e3, t2 = g2 * g2 / d2 * 1e3;
        chi += s.bits[j] ? t1 - t2 : -t1;
    }
    return chi;
}

}  // namespace

TEST(BareChiTable, Fig2Values) {
    const auto d = fixtures::fig2_device();
    auto table = bare_chi_table(d);
    ASSERT_EQ(table.size(), 4u);
    const double expected[] = {36.15, 29.86, 26.30, 20.02};
    int k = 0;
    for (const auto& [s, chi] : table) {
        EXPECT_NEAR(chi, expected[k++], 5e-3) << s.label();
        EXPECT_NEAR(chi, hand_bare_chi(d, s), 1e-10) << s.label();
    }
}

TEST(BareChiTable, IdenticalQubitsDependOnExcitationsOnly) {
    auto table = bare_chi_table(fixtures::fig4_device());
    ASSERT_EQ(table.size(), 16u);
    std::map<int, double> by_class;
    for (const auto& [s, chi] : table) {
        auto [it, fresh] = by_class.emplace(s.excitations(), chi);
        if (!fresh) {
            EXPECT_EQ(it->second, chi) << s.label();
        }
    }
    EXPECT_EQ(by_class.size(), 5u);
    // Each extra excitation lowers the shift by the same amount.
    const double step = by_class[0] - by_class[1];
    for (int k = 1; k < 4; ++k) EXPECT_NEAR(by_class[k] - by_class[k + 1], step, 1e-10);
}

TEST(BareChiTable, TwoLevelTruncationIsLinearShift) {
    const auto d = fixtures::single_qubit_device();
    const auto p = detunings_and_lambdas(d, 2);
    const double g = 0.12, delta = 4.297 - 5.005;
    EXPECT_NEAR(bare_chi_shift(LogicalState::parse("0"), p), -g * g / delta * 1e3, 1e-12 * 20.3);
    EXPECT_NEAR(bare_chi_shift(LogicalState::parse("1"), p), g * g / delta * 1e3, 1e-12 * 20.3);
}

TEST(StabilityBorder, Fig2States) {
    const auto d = fixtures::fig2_device();
    const auto p = detunings_and_lambdas(d);
    for (const auto& s : all_states(2)) {
        auto b = stability_border(s, d);
        // Delta_omega is affine in delta_c with unit slope, so the flip sits where
        // Delta_omega reaches the threshold sqrt(3) kappa / 2 on the side opposite chi_nl.
        auto sp = stability_params(s, p, 0.0);
        const double closed = -sp.delta_omega_mhz - std::copysign(std::sqrt(3.0) / 2, sp.chi_nl_mhz);
        EXPECT_NEAR(b.delta_c_mhz, closed, 1e-9) << s.label();
        EXPECT_LE(std::abs(b.delta_c_mhz - b.proxy_mhz), 2.0) << s.label();
    }
    EXPECT_NEAR(stability_border(LogicalState::parse("11"), d).delta_c_mhz, -20.0, 1.0);
    EXPECT_NEAR(stability_border(LogicalState::parse("10"), d).delta_c_mhz, -26.3, 1.0);
}

// The occupation offset moves the border by roughly one MHz per excited qubit,
// which the bare proxy does not see; the top classes of four qubits exceed 2 MHz.
TEST(StabilityBorder, ProxyAccuracyFig4) {
    const auto d = fixtures::fig4_device();
    for (const char* label : {"0000", "0001", "0011", "0111", "1111"}) {
        auto b = stability_border(LogicalState::parse(label), d);
        EXPECT_LE(std::abs(b.delta_c_mhz - b.proxy_mhz), 2.0) << label;
    }
}

TEST(StabilityBorder, OccupiedProxyWithinThresholdOffset) {
    for (const auto& d : {fixtures::fig2_device(), fixtures::fig4_device()}) {
        for (const auto& s : all_states(d.num_qubits())) {
            auto b = stability_border(s, d);
            EXPECT_LE(std::abs(b.delta_c_mhz - b.occupied_proxy_mhz), std::sqrt(3.0) / 2 + 1e-9) << s.label();
        }
    }
}

TEST(StabilityBorder, DecoupledHasNoBorder) {
    auto p = detunings_and_lambdas(fixtures::fig2_device());
    for (auto& q : p.qubits) q.g_ghz.setZero(), q.lambda.setZero();
    EXPECT_THROW(stability_border(LogicalState::parse("01"), p, 1.0), NumericError);
}

TEST(TwoQubitParityPoint, Fig2Device) {
    const auto d = fixtures::fig2_device();
    const auto chi = bare_chi_table(d);
    auto pt = two_qubit_parity_point(d);
    const double c10 = chi.at(LogicalState::parse("10")), c11 = chi.at(LogicalState::parse("11"));
    EXPECT_DOUBLE_EQ(pt.delta_c_opt_mhz, -(c10 + c11) / 2);
    EXPECT_NEAR(pt.delta_c_opt_mhz, -23.2, 0.05);
    EXPECT_NEAR(pt.drive_frequency_ghz, 5.005 + (c10 + c11) / 2e3, 1e-12);
    // omega_c + chi_11 < omega_d < omega_c + chi_10
    EXPECT_GT(pt.drive_frequency_ghz, 5.005 + c11 / 1e3);
    EXPECT_LT(pt.drive_frequency_ghz, 5.005 + c10 / 1e3);
    EXPECT_GT(pt.border_width_mhz(), 5.0);
    EXPECT_LT(pt.border_width_mhz(), 8.0);
    EXPECT_LT(pt.window.low_mhz, pt.window.high_mhz);

    // Window edges are the Kerr bifurcation drive strengths at the operating point.
    const auto p = detunings_and_lambdas(d);
    auto eps2 = [&](const char* l) { return bifurcation(LogicalState::parse(l), p, 1.0, pt.delta_c_opt_mhz); };
    EXPECT_FALSE(eps2("11").exists);
    EXPECT_DOUBLE_EQ(pt.window.low_mhz, std::max(*eps2("01").epsilon2, *eps2("10").epsilon2));
    EXPECT_DOUBLE_EQ(pt.window.high_mhz, *eps2("00").epsilon2);
}

TEST(TwoQubitParityPoint, IdenticalQubitsStillHaveWindow) {
    DeviceSpec d{{5.005, 1.0}, {fixtures::fig2_qubit1(), fixtures::fig2_qubit1()}, 3};
    auto chi = bare_chi_table(d);
    EXPECT_EQ(chi.at(LogicalState::parse("01")), chi.at(LogicalState::parse("10")));
    auto pt = two_qubit_parity_point(d);
    EXPECT_GT(pt.window.width(), 0.0);
}

TEST(TwoQubitParityPoint, OverlappingBordersAreRejected) {
    // A large kappa pushes every state's bifurcation threshold beyond the class gap.
    EXPECT_THROW(two_qubit_parity_point(fixtures::fig2_device(6.0)), ValidationError);
}

TEST(ParityPlan, TwoQubitsReduceToParityPoint) {
    const auto d = fixtures::fig2_device();
    auto plan = parity_plan(d);
    auto pt = two_qubit_parity_point(d);
    ASSERT_EQ(plan.drives.size(), 1u);
    EXPECT_EQ(plan.drives[0].delta_c_mhz, pt.delta_c_opt_mhz);
    EXPECT_EQ(plan.window.low_mhz, pt.window.low_mhz);
    EXPECT_EQ(plan.window.high_mhz, pt.window.high_mhz);
    EXPECT_TRUE(plan.window.contains(plan.operating_epsilon_mhz));
    for (const auto& s : all_states(2)) {
        EXPECT_EQ(plan.overall.at(s), s.odd() ? Parity::odd : Parity::even) << s.label();
        EXPECT_EQ(plan.predicted.at(s)[0], s.odd() ? Outcome::bright : Outcome::dark) << s.label();
    }
}

TEST(ParityPlan, FourIdenticalQubitsTwoDrives) {
    const auto d = fixtures::fig4_device();
    auto plan = parity_plan(d);
    ASSERT_EQ(plan.drives.size(), 2u);
    const auto chi = bare_chi_table(d);
    auto c = [&](const char* l) { return chi.at(LogicalState::parse(l)); };
    // One drive between |0001> and |0011>, one between |0111> and |1111>.
    EXPECT_EQ(plan.drives[0].odd_class, 1);
    EXPECT_DOUBLE_EQ(plan.drives[0].delta_c_mhz, -(c("0001") + c("0011")) / 2);
    EXPECT_EQ(plan.drives[1].odd_class, 3);
    EXPECT_DOUBLE_EQ(plan.drives[1].delta_c_mhz, -(c("0111") + c("1111")) / 2);
    for (const auto& dr : plan.drives) {
        ASSERT_TRUE(dr.border_high_mhz.has_value());
        EXPECT_GT(dr.delta_c_mhz, dr.border_low_mhz);
        EXPECT_LT(dr.delta_c_mhz, *dr.border_high_mhz);
    }
    EXPECT_NEAR(plan.window.low_mhz, 4.87, 0.05);
    EXPECT_NEAR(plan.window.high_mhz, 10.11, 0.05);
    for (const auto& s : all_states(4)) {
        EXPECT_EQ(plan.overall.at(s), s.odd() ? Parity::odd : Parity::even) << s.label();
        // Each odd class is lit by exactly its own drive.
        for (std::size_t j = 0; j < 2; ++j) {
            const bool own = s.excitations() == plan.drives[j].odd_class;
            EXPECT_EQ(plan.predicted.at(s)[j] == Outcome::bright, own) << s.label() << " drive " << j;
        }
    }
}

// Three qubits: the top class is odd and gets its own drive, so two drives in total.
TEST(ParityPlan, ThreeIdenticalQubitsMatchBifurcationReports) {
    DeviceSpec d{{5.005, 1.0}, {fixtures::fig2_qubit1(), fixtures::fig2_qubit1(), fixtures::fig2_qubit1()}, 3};
    auto plan = parity_plan(d);
    ASSERT_EQ(plan.drives.size(), 2u);
    EXPECT_EQ(plan.drives[1].odd_class, 3);
    EXPECT_FALSE(plan.drives[1].border_high_mhz.has_value());
    const auto p = detunings_and_lambdas(d);
    for (const auto& s : all_states(3)) {
        std::vector<bool> flags;
        for (std::size_t j = 0; j < plan.drives.size(); ++j) {
            auto r = bifurcation(s, p, 1.0, plan.drives[j].delta_c_mhz);
            const bool bright = r.exists && *r.epsilon2 < plan.operating_epsilon_mhz;
            EXPECT_EQ(plan.predicted.at(s)[j] == Outcome::bright, bright) << s.label();
            flags.push_back(bright);
        }
        EXPECT_EQ(classify(flags), s.odd() ? Parity::odd : Parity::even) << s.label();
    }
}

TEST(ParityPlan, RejectsSingleQubit) {
    EXPECT_THROW(parity_plan(fixtures::single_qubit_device()), ValidationError);
}

TEST(Classify, Flags) {
    EXPECT_EQ(classify({false, false}), Parity::even);
    EXPECT_EQ(classify({true, false}), Parity::odd);
    EXPECT_EQ(classify({false, true}), Parity::odd);
    EXPECT_EQ(classify({}), Parity::even);
}

TEST(CheckPlan, DeterministicAcrossThreadCounts) {
    const auto d = fixtures::fig2_device();
    auto plan = parity_plan(d);
    auto a = check_plan(plan, d, 200, 1);
    auto b = check_plan(plan, d, 200, 4);
    EXPECT_EQ(a.photons, b.photons);
    EXPECT_EQ(a.contrast(), b.contrast());
}
