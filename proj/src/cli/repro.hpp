#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cli/output.hpp"
#include "cqed/model.hpp"

namespace cqed::cli {

inline const std::vector<std::string> kReproIds{"fig2", "fig3", "fig4", "fig5", "table1", "gamma-phi"};

// Built-in devices: two transmons (fig2, fig3, table1, gamma-phi) and four
// identical ten-level transmons (fig4, fig5), kappa = 1 MHz.
DeviceSpec two_qubit_device();
DeviceSpec four_qubit_device();

// Reference drive strengths 20 log10(eps_2 / MHz) at delta_c = 0 for 00, 01, 10, 11.
inline constexpr double kTable1ReferenceDb[4] = {41.4, 38.7, 37.6, 33.4};

// kappa in [0.5, 5] MHz minimising the largest deviation from the reference
// values, scanned on a 5 kHz grid. The minimiser and its worst deviation in dB.
struct Table1Calibration {
    double kappa_mhz;
    double worst_deviation_db;
};
Table1Calibration calibrate_table1_kappa(const DeviceSpec& device);

struct ReproOptions {
    std::optional<DeviceSpec> device;  // overrides the built-in one
    std::optional<double> kappa_mhz;
    bool calibrate = false;            // table1 only
    unsigned threads = 0;
};

// Data behind each figure or table id; records its grids in `manifest`.
std::vector<Table> repro_tables(const std::string& id, const ReproOptions& opts, RunManifest& manifest);

}  // namespace cqed::cli
