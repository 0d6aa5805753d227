#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cqed/model.hpp"
#include "test_support.hpp"

using namespace cqed;

namespace {

const char* kFig2Config = R"(levels = 3
[cavity]
omega_c_ghz = 5.005
kappa_mhz = 1.0

[[qubit]]
omega10_ghz = 4.297
omega21_ghz = 4.071
g1_ghz = 0.12

[[qubit]]
omega10_ghz = 4.094
omega21_ghz = 3.868
g1_ghz = 0.12
)";

std::string replace(std::string text, const std::string& from, const std::string& to) {
    auto pos = text.find(from);
    if (pos != std::string::npos) text.replace(pos, from.size(), to);
    return text;
}

}  // namespace

TEST(LoadDevice, Fig2Config) {
    DeviceSpec d = load_device(kFig2Config);
    ASSERT_EQ(d.num_qubits(), 2);
    EXPECT_EQ(d.levels, 3);
    EXPECT_DOUBLE_EQ(d.cavity.omega_c_ghz, 5.005);
    EXPECT_DOUBLE_EQ(d.cavity.kappa_mhz, 1.0);
    EXPECT_DOUBLE_EQ(d.qubits[0].omega10_ghz, 4.297);
    EXPECT_DOUBLE_EQ(d.qubits[0].omega21_ghz, 4.071);
    EXPECT_DOUBLE_EQ(d.qubits[1].omega10_ghz, 4.094);
    EXPECT_DOUBLE_EQ(d.qubits[1].omega21_ghz, 3.868);
    EXPECT_DOUBLE_EQ(d.qubits[1].g1_ghz, 0.12);
    EXPECT_DOUBLE_EQ(d.qubits[1].gamma1_mhz, 0.0);
}

TEST(LoadDevice, ShippedConfigs) {
    DeviceSpec fig2 = load_device_file(fixtures::config_path("fig2.toml"));
    EXPECT_EQ(fig2.num_qubits(), 2);
    DeviceSpec fig4 = load_device_file(fixtures::config_path("fig4.toml"));
    EXPECT_EQ(fig4.num_qubits(), 4);
    EXPECT_EQ(fig4.levels, 10);
}

TEST(LoadDevice, ZeroCouplingRejected) {
    auto text = replace(kFig2Config, "g1_ghz = 0.12", "g1_ghz = 0");
    try {
        load_device(text);
        FAIL() << "expected validation error";
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("g1_ghz"), std::string::npos);
    }
}

TEST(LoadDevice, ZeroAnharmonicityRejected) {
    auto text = replace(kFig2Config, "omega21_ghz = 4.071", "omega21_ghz = 4.297");
    EXPECT_THROW(load_device(text), ValidationError);
}

TEST(LoadDevice, ParseErrors) {
    EXPECT_THROW(load_device("levels = \n"), ParseError);
    EXPECT_THROW(load_device("[cavity\nomega_c_ghz = 5\n"), ParseError);
    EXPECT_THROW(load_device(std::string(kFig2Config) + "bogus_key = 1\n"), ParseError);
    EXPECT_THROW(load_device(std::string(kFig2Config) + "[extra]\n"), ParseError);
    EXPECT_THROW(load_device(replace(kFig2Config, "kappa_mhz = 1.0", "kappa_mhz = 1.0\nkappa_mhz = 2.0")),
                 ParseError);
    EXPECT_THROW(load_device(replace(kFig2Config, "levels = 3", "levels = 3.5")), ParseError);
    EXPECT_THROW(load_device(replace(kFig2Config, "kappa_mhz = 1.0", "kappa_mhz = fast")), ParseError);
}

TEST(LoadDevice, MissingRequiredKey) {
    EXPECT_THROW(load_device(replace(kFig2Config, "omega_c_ghz = 5.005", "")), ValidationError);
}

TEST(LoadDevice, InvariantBoundaries) {
    EXPECT_THROW(load_device(replace(kFig2Config, "kappa_mhz = 1.0", "kappa_mhz = 0")), ValidationError);
    EXPECT_THROW(load_device(replace(kFig2Config, "levels = 3", "levels = 2")), ValidationError);
    EXPECT_THROW(load_device(replace(kFig2Config, "levels = 3", "levels = 13")), ValidationError);
    EXPECT_THROW(load_device(replace(kFig2Config, "g1_ghz = 0.12", "g1_ghz = 0.12\ngamma1_mhz = -1")),
                 ValidationError);
    // A qubit resonant with the cavity has a zero detuning.
    EXPECT_THROW(load_device(replace(kFig2Config, "omega10_ghz = 4.297", "omega10_ghz = 5.005")),
                 ValidationError);
}

TEST(LoadDevice, CommentsAndWhitespace) {
    auto text = "# header\n  levels=3   # inline\n[cavity]\nomega_c_ghz=5.0\n\n[[qubit]]\n"
                "omega10_ghz = 4.2\nomega21_ghz = 4.0\ng1_ghz = 1e-1\n";
    DeviceSpec d = load_device(text);
    EXPECT_DOUBLE_EQ(d.qubits[0].g1_ghz, 0.1);
    EXPECT_DOUBLE_EQ(d.cavity.kappa_mhz, 1.0);
}

TEST(LoadDevice, RoundTripRandomDevices) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        DeviceSpec d = fixtures::random_device(rng, 1 + trial % 4, 3 + trial % 10);
        d.cavity.kappa_mhz = 0.1 + 0.37 * trial;
        DeviceSpec back = load_device(serialize(d));
        ASSERT_EQ(back.num_qubits(), d.num_qubits());
        EXPECT_EQ(back.levels, d.levels);
        EXPECT_EQ(back.cavity.omega_c_ghz, d.cavity.omega_c_ghz);
        EXPECT_EQ(back.cavity.kappa_mhz, d.cavity.kappa_mhz);
        for (int j = 0; j < d.num_qubits(); ++j) {
            EXPECT_EQ(back.qubits[j].omega10_ghz, d.qubits[j].omega10_ghz);
            EXPECT_EQ(back.qubits[j].omega21_ghz, d.qubits[j].omega21_ghz);
            EXPECT_EQ(back.qubits[j].g1_ghz, d.qubits[j].g1_ghz);
            EXPECT_EQ(back.qubits[j].gamma1_mhz, d.qubits[j].gamma1_mhz);
            EXPECT_EQ(back.qubits[j].gamma_phi_mhz, d.qubits[j].gamma_phi_mhz);
        }
    }
}

TEST(HierarchyWarnings, Fig2DeviceSatisfiesDefaultFactor) {
    EXPECT_TRUE(hierarchy_warnings(fixtures::fig2_device()).empty());
}

TEST(HierarchyWarnings, ViolationIsReportedNotThrown) {
    DeviceSpec d = fixtures::fig2_device(25.0);  // kappa comparable to g^2/Delta
    auto warnings = hierarchy_warnings(d);
    EXPECT_FALSE(warnings.empty());
    EXPECT_NO_THROW(validate(d));
    // A stricter factor flags the reference device itself.
    EXPECT_FALSE(hierarchy_warnings(fixtures::fig2_device(), 10.0).empty());
}

TEST(CouplingLadder, Fig2Values) {
    auto g = coupling_ladder(0.12, 3);
    ASSERT_EQ(g.size(), 2);
    EXPECT_DOUBLE_EQ(g(0), 0.12);
    EXPECT_NEAR(g(1), 0.169706, 1e-6);
    EXPECT_NEAR(coupling_ladder(0.12, 4)(2), 0.207846, 1e-6);
    auto single = coupling_ladder(0.3, 2);
    ASSERT_EQ(single.size(), 1);
    EXPECT_DOUBLE_EQ(single(0), 0.3);
}

TEST(CouplingLadder, StrictlyIncreasing) {
    for (int M = 2; M <= kMaxLevels; ++M) {
        auto g = coupling_ladder(0.05, M);
        for (int i = 1; i < g.size(); ++i) EXPECT_GT(g(i), g(i - 1));
        for (int i = 0; i < g.size(); ++i) EXPECT_NEAR(g(i) * g(i), (i + 1) * 0.05 * 0.05, 1e-15);
    }
}

TEST(TransitionFrequencies, ConstantAnharmonicity) {
    auto w3 = transition_frequencies(fixtures::fig2_qubit1(), 3);
    ASSERT_EQ(w3.size(), 2);
    EXPECT_DOUBLE_EQ(w3(0), 4.297);
    EXPECT_DOUBLE_EQ(w3(1), 4.071);
    auto w4 = transition_frequencies(fixtures::fig2_qubit1(), 4);
    EXPECT_NEAR(w4(2), 3.845, 1e-12);
    QubitSpec q{5.0, 5.0 - 0.226, 0.1};
    auto w = transition_frequencies(q, 8);
    for (int i = 1; i < w.size(); ++i) EXPECT_NEAR(w(i - 1) - w(i), 0.226, 1e-12);
}

TEST(LogicalSigmaZ, GroundAndExcited) {
    auto pops = logical_sigma_z(LogicalState::parse("01"), 3);
    ASSERT_EQ(pops.size(), 2u);
    EXPECT_EQ(pops[0].sigma_z, Eigen::Vector2d(-1, 0));
    EXPECT_EQ(pops[1].sigma_z, Eigen::Vector2d(1, -1));
    EXPECT_EQ(pops[0].occupation, Eigen::Vector3d(1, 0, 0));
    EXPECT_EQ(pops[1].occupation, Eigen::Vector3d(0, 1, 0));

    auto ten = logical_sigma_z(LogicalState::parse("1"), 10);
    Eigen::VectorXd expected = Eigen::VectorXd::Zero(9);
    expected(0) = 1;
    expected(1) = -1;
    EXPECT_EQ(ten[0].sigma_z, expected);
}

TEST(LogicalSigmaZ, SigmaEqualsOccupationDifference) {
    for (int M = 2; M <= kMaxLevels; ++M) {
        for (const auto& s : all_states(3)) {
            for (const auto& p : logical_sigma_z(s, M)) {
                ASSERT_EQ(p.sigma_z.size(), M - 1);
                ASSERT_EQ(p.occupation.size(), M);
                EXPECT_EQ(p.occupation.sum(), 1.0);
                for (int i = 1; i < M; ++i)
                    EXPECT_EQ(p.sigma_z(i - 1), p.occupation(i) - p.occupation(i - 1));
            }
        }
    }
}

TEST(LogicalState, LabelsAndParity) {
    auto states = all_states(2);
    ASSERT_EQ(states.size(), 4u);
    EXPECT_EQ(states[0].label(), "00");
    EXPECT_EQ(states[1].label(), "01");
    EXPECT_EQ(states[2].label(), "10");
    EXPECT_EQ(states[3].label(), "11");
    EXPECT_TRUE(LogicalState::parse("0111").odd());
    EXPECT_FALSE(LogicalState::parse("0011").odd());
    EXPECT_THROW(LogicalState::parse("012"), ValidationError);
    EXPECT_THROW(LogicalState::parse(""), ValidationError);
}

TEST(DriveSpec, NegativeEpsilonRejected) {
    EXPECT_THROW(validate(DriveSpec{-1.0, 0.0}), ValidationError);
    EXPECT_NO_THROW(validate(DriveSpec{0.0, -20.0}));
}
