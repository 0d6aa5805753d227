#include "cli/repro.hpp"

#include <algorithm>
#include <cmath>

#include "cli/commands.hpp"
#include "cqed/errors.hpp"
#include "cqed/parity.hpp"
#include "cqed/spectrum.hpp"
#include "cqed/stability.hpp"
#include "cqed/steadystate.hpp"

namespace cqed::cli {

DeviceSpec two_qubit_device() {
    return {{5.005, 1.0}, {{4.297, 4.071, 0.12, 0.02, 0.01}, {4.094, 3.868, 0.12, 0.02, 0.01}}, 3};
}

DeviceSpec four_qubit_device() {
    DeviceSpec d{{5.005, 1.0}, {}, 10};
    d.qubits.assign(4, QubitSpec{4.297, 4.071, 0.12, 0.02, 0.01});
    return d;
}

namespace {

double worst_table1_deviation(const SpectralParams& sp, double kappa) {
    double worst = 0.0;
    const auto states = all_states(2);
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto r = bifurcation(states[i], sp, kappa, 0.0);
        if (!r.exists) return INFINITY;
        worst = std::max(worst, std::abs(epsilon_to_db(*r.epsilon2) - kTable1ReferenceDb[i]));
    }
    return worst;
}

Table table1(const DeviceSpec& device) {
    if (device.num_qubits() != 2) throw ValidationError("table1 needs a two-qubit device");
    const SpectralParams sp = detunings_and_lambdas(device);
    Table t{"table1",
            {{"state", "-"},
             {"kappa_mhz", "MHz"},
             {"epsilon2_mhz", "MHz"},
             {"epsilon2_db", "dB re 1 MHz"},
             {"reference_db", "dB re 1 MHz"},
             {"deviation_db", "dB"}},
            {}};
    const auto states = all_states(2);
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto r = bifurcation(states[i], sp, device.cavity.kappa_mhz, 0.0);
        const double db = r.epsilon2 ? epsilon_to_db(*r.epsilon2) : NAN;
        t.add({states[i].label(), device.cavity.kappa_mhz, r.epsilon2 ? *r.epsilon2 : NAN, db, kTable1ReferenceDb[i],
               db - kTable1ReferenceDb[i]});
    }
    return t;
}

Table parity_point_table(const DeviceSpec& device) {
    const auto p = two_qubit_parity_point(device);
    Table t{"fig3_parity_point",
            {{"delta_c_opt_mhz", "MHz"},
             {"drive_frequency_ghz", "GHz"},
             {"odd_border_mhz", "MHz"},
             {"even_border_mhz", "MHz"},
             {"border_width_mhz", "MHz"},
             {"epsilon_low_mhz", "MHz"},
             {"epsilon_high_mhz", "MHz"}},
            {}};
    t.add({p.delta_c_opt_mhz, p.drive_frequency_ghz, p.odd_border_mhz, p.even_border_mhz, p.border_width_mhz(),
           p.window.low_mhz, p.window.high_mhz});
    return t;
}

void append(std::vector<Table>& out, std::vector<Table> more) {
    for (auto& t : more) out.push_back(std::move(t));
}

}  // namespace

Table1Calibration calibrate_table1_kappa(const DeviceSpec& device) {
    const SpectralParams sp = detunings_and_lambdas(device);
    Table1Calibration best{0.5, INFINITY};
    for (int k = 0; k <= 900; ++k) {
        const double kappa = 0.5 + 0.005 * k;
        const double w = worst_table1_deviation(sp, kappa);
        if (w < best.worst_deviation_db) best = {kappa, w};
    }
    return best;
}

std::vector<Table> repro_tables(const std::string& id, const ReproOptions& opts, RunManifest& manifest) {
    if (std::find(kReproIds.begin(), kReproIds.end(), id) == kReproIds.end())
        throw ValidationError("unknown figure id '" + id + "'");
    const bool four = id == "fig4" || id == "fig5";
    DeviceSpec device = opts.device ? *opts.device : (four ? four_qubit_device() : two_qubit_device());
    if (opts.kappa_mhz) device.cavity.kappa_mhz = *opts.kappa_mhz;
    validate(device);
    manifest.set("figure", id);
    manifest.set("kappa_mhz", format_number(device.cavity.kappa_mhz));

    std::vector<Table> out;
    if (id == "fig2" || id == "fig4") {
        SweepOptions s;
        s.stop = four ? 50.0 : 45.0;
        s.name = id;
        manifest.set("grid", "epsilon " + format_number(s.start) + ".." + format_number(s.stop) + " dB, " +
                                 std::to_string(s.points) + " points, delta_c 0 MHz, up and down");
        append(out, sweep_tables(device, s, opts.threads));
        Table b = bifurcation_table(device, 0.0);
        b.name = id + "_bifurcation";
        out.push_back(std::move(b));
        if (four) {
            const auto plan = parity_plan(device);
            append(out, parity_tables(plan, nullptr));
        }
    } else if (id == "fig3" || id == "fig5") {
        BorderGrid g;
        g.name = id;
        if (four) {
            g.start_mhz = -100.0;
            g.points = 1101;
        }
        manifest.set("grid", "delta_c " + format_number(g.start_mhz) + ".." + format_number(g.stop_mhz) + " MHz, " +
                                 std::to_string(g.points) + " points");
        append(out, borders_tables(device, g, opts.threads));
        if (!four) out.push_back(parity_point_table(device));
    } else if (id == "table1") {
        if (opts.calibrate) {
            const auto c = calibrate_table1_kappa(device);
            device.cavity.kappa_mhz = c.kappa_mhz;
            manifest.set("kappa_mhz", format_number(c.kappa_mhz));
            manifest.set("calibration", "kappa 0.5..5 MHz, step 0.005 MHz, minimax deviation");
        }
        out.push_back(table1(device));
    } else {  // gamma-phi
        DecoherenceOptions d;
        d.kappa_mhz = linear_grid(1.0, 5.0, 41);
        manifest.set("grid", "delta_c -20 MHz, epsilon 10 MHz, kappa 1..5 MHz, 41 points, qubit 1");
        auto tables = decoherence_tables(device, d);
        tables[1].name = "gamma_phi_kappa_scan";
        out.push_back(std::move(tables[1]));
    }
    return out;
}

}  // namespace cqed::cli
